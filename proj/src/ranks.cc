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

#include "storyeval/ranks.h"

#include <algorithm>

namespace storyeval {

RankTable MeanRanks(std::span<const RankingRecord> records,
                    bool split_by_source) {
  RankTable table;
  for (const auto& r : records) {
    const std::string& group = split_by_source ? r.source : kAllEvaluators;
    auto& cell = table.groups[group][r.criterion][r.model];
    cell.rank_sum += r.rank;
    ++cell.count;
  }
  for (auto& [group, criteria] : table.groups) {
    for (auto& [criterion, cells] : criteria) {
      for (auto& [model, cell] : cells) {
        cell.mean = static_cast<double>(cell.rank_sum) /
                    static_cast<double>(cell.count);
      }
    }
  }
  return table;
}

std::vector<std::string> OrderByMean(
    const std::map<std::string, RankCell>& cells) {
  std::vector<std::string> models;
  for (const auto& [model, cell] : cells) models.push_back(model);
  std::stable_sort(models.begin(), models.end(),
                   [&](const std::string& a, const std::string& b) {
                     return cells.at(a).mean < cells.at(b).mean;
                   });
  return models;
}

}  // namespace storyeval
