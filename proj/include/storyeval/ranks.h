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

// Average-position tables from ranking ballots (lower is better).

#ifndef STORYEVAL_RANKS_H_
#define STORYEVAL_RANKS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "storyeval/corpus.h"

namespace storyeval {

struct RankCell {
  double mean = 0.0;
  size_t count = 0;
  long long rank_sum = 0;
};

struct RankTable {
  // group ("all", or the evaluator source when split) -> criterion ->
  // model -> cell.
  std::map<std::string, std::map<std::string, std::map<std::string, RankCell>>>
      groups;

  bool empty() const { return groups.empty(); }
};

inline constexpr char kAllEvaluators[] = "all";

// Arithmetic mean rank per (criterion, model), optionally split by
// evaluator source. Means are computed from exact integer sums.
RankTable MeanRanks(std::span<const RankingRecord> records,
                    bool split_by_source = false);

// Models of one criterion ordered best first (lowest mean, then name).
std::vector<std::string> OrderByMean(
    const std::map<std::string, RankCell>& cells);

}  // namespace storyeval

#endif  // STORYEVAL_RANKS_H_
