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

// In-memory data model and loaders: story corpora (JSONL), score matrices
// (CSV or JSON, Table-3 shaped), and ranking ballots (CSV).

#ifndef STORYEVAL_CORPUS_H_
#define STORYEVAL_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace storyeval {

struct Story {
  std::string story_id;
  std::string model;
  std::vector<std::string> sentences;  // each nonempty
  std::string raw_text;                // space-join of `sentences`

  friend bool operator==(const Story&, const Story&) = default;
};

struct ModelCorpus {
  std::string model;
  std::vector<Story> stories;

  size_t n() const { return stories.size(); }
};

// Parses one story per line. Each record needs "story_id", "model", and
// either "sentences" (array of strings) or "raw_text". When both are given
// the sentences win and raw_text is rebuilt from them. Result is grouped by
// model and ordered by model name; stories keep file order.
//
// Throws ParseError (with line number) on malformed records and
// EmptyCorpusError when no records are present.
std::vector<ModelCorpus> ParseStories(std::istream& in,
                                      const std::string& source);
std::vector<ModelCorpus> LoadStories(const std::filesystem::path& path);

// Writes corpora back as JSONL (sentences and raw_text both emitted).
void WriteStories(std::ostream& out, std::span<const ModelCorpus> corpora);

enum class Direction { kHigherBetter, kLowerBetter };

std::string_view DirectionName(Direction d);  // "higher" / "lower"
Direction ParseDirection(std::string_view text);  // throws ConfigError

// Lower-is-better for rep_1..rep_4 and Yule's K, higher otherwise.
Direction DefaultDirection(std::string_view metric_name);

struct MetricInfo {
  std::string name;
  Direction direction = Direction::kHigherBetter;
};

struct ScoreRow {
  std::string model;
  std::vector<std::optional<double>> values;  // aligned to metrics
};

// Models x metrics table with one designated human baseline row. Missing
// cells are std::nullopt, never zero. Immutable after construction.
class ScoreMatrix {
 public:
  // Throws DataError on duplicate metric/model names, misaligned rows, or
  // non-finite cells; ConfigError when `human_row` is not among the rows.
  ScoreMatrix(std::vector<MetricInfo> metrics, std::vector<ScoreRow> rows,
              std::string human_row);

  const std::vector<MetricInfo>& metrics() const { return metrics_; }
  const std::vector<ScoreRow>& rows() const { return rows_; }
  const std::string& human_row() const { return human_row_; }
  size_t metric_count() const { return metrics_.size(); }

  std::optional<size_t> metric_index(std::string_view name) const;
  bool has_model(std::string_view model) const;

  // Throws ConfigError for an unknown model.
  const ScoreRow& row(std::string_view model) const;
  const ScoreRow& human() const { return row(human_row_); }

  std::optional<double> value(std::string_view model, size_t metric) const {
    return row(model).values.at(metric);
  }

  // Every row except the human one, in table order.
  std::vector<std::string> machine_models() const;

 private:
  std::vector<MetricInfo> metrics_;
  std::vector<ScoreRow> rows_;
  std::string human_row_;
  std::unordered_map<std::string, size_t> row_index_;
};

// Reads a CSV whose first column is `model` and whose remaining header
// cells are metric names. Blank cells and "-" are missing. Directions come
// from `sidecar` when given, else from a `metrics.json` next to the CSV when
// present, else DefaultDirection(). Files ending in ".json" are read in the
// JSON layout written by WriteScoreMatrixJson().
ScoreMatrix LoadScoreMatrix(
    const std::filesystem::path& path, const std::string& human_row,
    const std::optional<std::filesystem::path>& sidecar = std::nullopt);

ScoreMatrix ParseScoreMatrixCsv(std::istream& in, const std::string& source,
                                const std::string& human_row,
                                const std::vector<MetricInfo>& directions = {});

ScoreMatrix ParseScoreMatrixJson(std::istream& in, const std::string& source,
                                 const std::string& human_row);

// Sidecar layout: {"metric name": "higher" | "lower", ...}.
std::vector<MetricInfo> LoadMetricDirections(const std::filesystem::path& path);

void WriteScoreMatrixCsv(std::ostream& out, const ScoreMatrix& matrix);
void WriteScoreMatrixJson(std::ostream& out, const ScoreMatrix& matrix);

struct RankingRecord {
  std::string evaluator_id;
  std::string item_id;
  std::string criterion;
  std::string model;
  int rank = 0;
  // Who produced the ballot ("human", "gpt-4o", ...). Taken from the
  // optional `evaluator_source` column; "human" when absent.
  std::string source = "human";
};

// Header must name evaluator_id,item_id,criterion,model,rank (any order,
// optional evaluator_source). An empty or header-only file yields no
// records. Throws ParseError on malformed rows and IntegrityError when
// ValidateRankings() fails.
std::vector<RankingRecord> ParseRankings(std::istream& in,
                                         const std::string& source);
std::vector<RankingRecord> LoadRankings(const std::filesystem::path& path);

// Every (evaluator, item, criterion) group must rank each model at most once
// with ranks forming a permutation of 1..k, and every group of a criterion
// must cover the same model set (no incomplete ballots).
void ValidateRankings(std::span<const RankingRecord> records);

}  // namespace storyeval

#endif  // STORYEVAL_CORPUS_H_
