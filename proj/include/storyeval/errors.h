// Copyright 2026 The storyeval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STORYEVAL_ERRORS_H_
#define STORYEVAL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace storyeval {

// Bad input data. The CLI maps these to exit status 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file content. Carries the 1-based line number when known
// (0 otherwise).
class ParseError : public DataError {
 public:
  ParseError(const std::string& source, size_t line, const std::string& what)
      : DataError(Format(source, line, what)), line_(line) {}

  size_t line() const { return line_; }

 private:
  static std::string Format(const std::string& source, size_t line,
                            const std::string& what) {
    std::string msg = source;
    if (line > 0) msg += ":" + std::to_string(line);
    return msg + ": " + what;
  }

  size_t line_;
};

// Structurally valid data that violates a semantic invariant (e.g. a ranking
// group that is not a permutation).
class IntegrityError : public DataError {
 public:
  using DataError::DataError;
};

// A stories file with no records.
class EmptyCorpusError : public DataError {
 public:
  using DataError::DataError;
};

// Weight vector does not line up with the score matrix metrics.
class AlignmentError : public DataError {
 public:
  using DataError::DataError;
};

// Invalid configuration: unknown column, missing human row, bad flag value.
// The CLI maps these to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace storyeval

#endif  // STORYEVAL_ERRORS_H_
