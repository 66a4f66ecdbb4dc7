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

// Minimal RFC 4180 reader/writer: comma separated, double-quote escaping,
// quoted fields may span lines. CR before LF is dropped.

#ifndef STORYEVAL_CSV_H_
#define STORYEVAL_CSV_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace storyeval {

struct CsvRecord {
  size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// Reads every record. Blank lines are skipped. Throws ParseError on an
// unterminated quoted field.
std::vector<CsvRecord> ReadCsv(std::istream& in, const std::string& source);

// Quotes the field if it contains a comma, quote, or line break.
std::string CsvEscape(std::string_view field);

std::string CsvJoin(const std::vector<std::string>& fields);

// Strips ASCII whitespace from both ends.
std::string_view Trim(std::string_view s);

}  // namespace storyeval

#endif  // STORYEVAL_CSV_H_
