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

// Rendering of lexical tables, ideality scores, Monte-Carlo distributions
// and rank tables as markdown, CSV and JSON.

#ifndef STORYEVAL_REPORT_H_
#define STORYEVAL_REPORT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "storyeval/corpus.h"
#include "storyeval/ideality.h"
#include "storyeval/postag.h"
#include "storyeval/ranks.h"
#include "storyeval/textstats.h"

namespace storyeval {

enum class OutputFormat { kMarkdown, kCsv, kJson };

OutputFormat ParseOutputFormat(std::string_view text);  // md|csv|json

// Column names of the lexical table, in display order.
const std::vector<std::string>& LexicalMetricNames();

// Human-facing header for a known metric name; the name itself otherwise.
std::string MetricLabel(std::string_view name);

std::vector<MetricInfo> LexicalMetrics();

// One row per model; `profiles` is aligned with `stats`.
std::vector<ScoreRow> LexicalRows(std::span<const CorpusLexStats> stats,
                                  std::span<const PosProfile> profiles);

// Full per-model records (counts included) as a JSON array.
std::string LexicalStatsJson(std::span<const CorpusLexStats> stats,
                             std::span<const PosProfile> profiles);

struct ReportSpec {
  std::vector<std::string> columns;  // empty: every metric of the matrix
  bool mark_best = true;             // best in bold, second underlined
  bool mark_closest = true;          // closest-to-human suffix
  std::optional<int> digits;         // fixed decimals; exact repr otherwise
};

struct ColumnHighlight {
  std::string metric;
  Direction direction = Direction::kHigherBetter;
  std::vector<std::string> best;    // every row at the best value
  std::vector<std::string> second;  // every row at the next distinct value
  std::optional<ChScore> closest;
};

struct RenderedReport {
  std::vector<std::string> columns;  // after dropping all-missing columns
  std::vector<ColumnHighlight> highlights;
  std::vector<std::string> warnings;
  std::string markdown;
  std::string csv;
  std::string json;             // score-matrix JSON plus "highlights"
  std::string highlights_json;  // sidecar for the unstyled CSV
};

// Throws ConfigError for a column not in the matrix. Columns whose cells
// are all missing are dropped with a warning.
RenderedReport Render(const ScoreMatrix& matrix, const ReportSpec& spec);

// Highlights over present cells, human row included for best/second.
ColumnHighlight ComputeHighlight(const ScoreMatrix& matrix, size_t metric);

// Markdown/CSV without a human row (no closest-to-human marks).
std::string RenderPlainTable(std::span<const MetricInfo> metrics,
                             std::span<const ScoreRow> rows,
                             OutputFormat format, std::optional<int> digits);

// Ideality scores ordered best first by the chosen column.
std::string RenderIdeality(std::vector<IdealityScore> scores, bool normalized,
                           OutputFormat format);

struct McDistribution {
  std::string csv;           // run,model,score (long format)
  std::string summary_json;  // per-model five-number summary and mean
};

// Requires nonempty runs.
McDistribution EmitMcDistribution(std::span<const McRun> runs);

std::string RenderRankTable(const RankTable& table, OutputFormat format);

}  // namespace storyeval

#endif  // STORYEVAL_REPORT_H_
