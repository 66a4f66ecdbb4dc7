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

// Small numeric helpers shared by the metric and report modules.

#ifndef STORYEVAL_NUMERIC_H_
#define STORYEVAL_NUMERIC_H_

#include <cmath>
#include <span>
#include <string>

namespace storyeval {

// Neumaier-compensated running sum. Results depend only on the order of
// Add() calls, which callers keep fixed.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Mean of the values; NaN for an empty span.
double Mean(std::span<const double> values);

// Quantile with linear interpolation between order statistics (the
// "type 7" definition). `sorted` must be ascending and nonempty.
double QuantileSorted(std::span<const double> sorted, double q);

struct FiveNumberSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  size_t count = 0;
};

// Summary of an unsorted sample. The sample must be nonempty.
FiveNumberSummary Summarize(std::span<const double> values);

// Shortest decimal form that parses back to the identical double.
std::string FormatExact(double value);

// Fixed-point form with `digits` decimals, for human-facing tables.
std::string FormatFixed(double value, int digits);

// Parses a full decimal string as a finite double; false on any trailing
// garbage, empty input, or non-finite value.
bool ParseFiniteDouble(const std::string& text, double* out);

}  // namespace storyeval

#endif  // STORYEVAL_NUMERIC_H_
