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

// Command-line front end: stats, ideality, weighted-ideality, ranks, report.

#ifndef STORYEVAL_CLI_H_
#define STORYEVAL_CLI_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "storyeval/ideality.h"
#include "storyeval/report.h"

namespace storyeval {

enum class Subcommand { kStats, kIdeality, kWeightedIdeality, kRanks, kReport };

struct RunConfig {
  Subcommand subcommand = Subcommand::kStats;
  std::vector<std::filesystem::path> inputs;  // stories or rankings
  std::optional<std::filesystem::path> scores;
  std::optional<std::filesystem::path> metrics_sidecar;
  std::optional<std::filesystem::path> tagger_lexicon;
  std::string human_row = "Humans";
  std::optional<uint64_t> seed;
  size_t runs = 1000;
  NormKind norm = NormKind::kL1;
  bool normalize = false;
  bool standardize_gaps = false;
  bool split_by_source = false;
  bool complete_only = false;
  std::vector<std::string> models;
  std::vector<std::string> columns;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> summary_out;
  std::optional<std::filesystem::path> highlights_out;
  std::optional<OutputFormat> format;  // inferred from --out when unset
  std::optional<int> digits;
};

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitConfigError = 2;

// Throws ConfigError when the configuration is inconsistent (for example
// weighted-ideality without a seed).
void ValidateConfig(const RunConfig& config);

// Executes a validated configuration. Results go to `config.out` or `out`;
// warnings and diagnostics go to `err`. Throws DataError / ConfigError.
void Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv, runs, and maps failures to exit statuses.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace storyeval

#endif  // STORYEVAL_CLI_H_
