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

#include "storyeval/corpus.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "json.hpp"
#include "storyeval/csv.h"
#include "storyeval/errors.h"
#include "storyeval/numeric.h"
#include "storyeval/textstats.h"

namespace storyeval {
namespace {

using json = nlohmann::json;

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return in;
}

std::string JoinSentences(const std::vector<std::string>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s;
  }
  return out;
}

std::string RequireString(const json& record, const char* key,
                          const std::string& source, size_t line) {
  auto it = record.find(key);
  if (it == record.end()) {
    throw ParseError(source, line, std::string("missing \"") + key + "\"");
  }
  if (!it->is_string()) {
    throw ParseError(source, line, std::string("\"") + key +
                                       "\" must be a string");
  }
  std::string value(Trim(it->get<std::string>()));
  if (value.empty()) {
    throw ParseError(source, line, std::string("\"") + key +
                                       "\" must be nonempty");
  }
  return value;
}

Story ParseStoryLine(const std::string& text, const std::string& source,
                     size_t line) {
  json record;
  try {
    record = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source, line, std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) {
    throw ParseError(source, line, "record must be a JSON object");
  }

  Story story;
  story.story_id = RequireString(record, "story_id", source, line);
  story.model = RequireString(record, "model", source, line);

  if (auto it = record.find("sentences"); it != record.end()) {
    if (!it->is_array()) {
      throw ParseError(source, line, "\"sentences\" must be an array");
    }
    for (const auto& s : *it) {
      if (!s.is_string()) {
        throw ParseError(source, line, "sentences must be strings");
      }
      std::string sentence(Trim(s.get<std::string>()));
      if (sentence.empty()) {
        throw ParseError(source, line, "empty sentence");
      }
      story.sentences.push_back(std::move(sentence));
    }
  } else if (auto raw = record.find("raw_text"); raw != record.end()) {
    if (!raw->is_string()) {
      throw ParseError(source, line, "\"raw_text\" must be a string");
    }
    story.sentences = SplitSentences(raw->get<std::string>());
  } else {
    throw ParseError(source, line, "missing \"sentences\" or \"raw_text\"");
  }
  if (story.sentences.empty()) {
    throw ParseError(source, line, "story has no sentences");
  }
  story.raw_text = JoinSentences(story.sentences);
  return story;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(
                          static_cast<unsigned char>(c)));
  return out;
}

std::optional<double> ParseCell(const std::string& raw,
                                const std::string& source, size_t line,
                                const std::string& column) {
  const std::string_view cell = Trim(raw);
  if (cell.empty() || cell == "-") return std::nullopt;
  double value = 0.0;
  if (!ParseFiniteDouble(std::string(cell), &value)) {
    throw ParseError(source, line, "non-numeric value '" + std::string(cell) +
                                       "' in column " + column);
  }
  return value;
}

}  // namespace

std::vector<ModelCorpus> ParseStories(std::istream& in,
                                      const std::string& source) {
  std::map<std::string, ModelCorpus> by_model;
  std::set<std::pair<std::string, std::string>> seen_ids;
  std::string text;
  size_t line = 0;
  size_t records = 0;
  while (std::getline(in, text)) {
    ++line;
    if (Trim(text).empty()) continue;
    Story story = ParseStoryLine(text, source, line);
    if (!seen_ids.emplace(story.model, story.story_id).second) {
      throw ParseError(source, line, "duplicate story_id '" + story.story_id +
                                         "' for model '" + story.model + "'");
    }
    auto& corpus = by_model[story.model];
    corpus.model = story.model;
    corpus.stories.push_back(std::move(story));
    ++records;
  }
  if (records == 0) throw EmptyCorpusError(source + ": no stories");

  std::vector<ModelCorpus> out;
  out.reserve(by_model.size());
  for (auto& [name, corpus] : by_model) out.push_back(std::move(corpus));
  return out;
}

std::vector<ModelCorpus> LoadStories(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return ParseStories(in, path.string());
}

void WriteStories(std::ostream& out, std::span<const ModelCorpus> corpora) {
  for (const auto& corpus : corpora) {
    for (const auto& story : corpus.stories) {
      json record = {{"story_id", story.story_id},
                     {"model", story.model},
                     {"sentences", story.sentences},
                     {"raw_text", story.raw_text}};
      out << record.dump() << '\n';
    }
  }
}

std::string_view DirectionName(Direction d) {
  return d == Direction::kHigherBetter ? "higher" : "lower";
}

Direction ParseDirection(std::string_view text) {
  const std::string t = Lower(Trim(text));
  if (t == "higher" || t == "up" || t == "higher-better" || t == "max") {
    return Direction::kHigherBetter;
  }
  if (t == "lower" || t == "down" || t == "lower-better" || t == "min") {
    return Direction::kLowerBetter;
  }
  throw ConfigError("unknown metric direction '" + std::string(text) + "'");
}

Direction DefaultDirection(std::string_view metric_name) {
  static const std::unordered_set<std::string> kLowerBetter = {
      "rep_1", "rep_2", "rep_3", "rep_4", "rep1", "rep2", "rep3", "rep4",
      "yules_k", "yule_k", "yule's k", "k"};
  return kLowerBetter.contains(Lower(Trim(metric_name)))
             ? Direction::kLowerBetter
             : Direction::kHigherBetter;
}

ScoreMatrix::ScoreMatrix(std::vector<MetricInfo> metrics,
                         std::vector<ScoreRow> rows, std::string human_row)
    : metrics_(std::move(metrics)),
      rows_(std::move(rows)),
      human_row_(std::move(human_row)) {
  std::unordered_set<std::string> names;
  for (const auto& m : metrics_) {
    if (m.name.empty()) throw DataError("empty metric name");
    if (!names.insert(m.name).second) {
      throw DataError("metric '" + m.name + "' appears more than once");
    }
  }
  for (size_t i = 0; i < rows_.size(); ++i) {
    const auto& r = rows_[i];
    if (r.model.empty()) throw DataError("empty model name");
    if (r.values.size() != metrics_.size()) {
      throw DataError("row '" + r.model + "' has " +
                      std::to_string(r.values.size()) + " cells, expected " +
                      std::to_string(metrics_.size()));
    }
    for (const auto& v : r.values) {
      if (v && !std::isfinite(*v)) {
        throw DataError("row '" + r.model + "' has a non-finite cell");
      }
    }
    if (!row_index_.emplace(r.model, i).second) {
      throw DataError("model '" + r.model + "' appears more than once");
    }
  }
  if (!row_index_.contains(human_row_)) {
    throw ConfigError("human row '" + human_row_ + "' not found");
  }
}

std::optional<size_t> ScoreMatrix::metric_index(std::string_view name) const {
  for (size_t i = 0; i < metrics_.size(); ++i) {
    if (metrics_[i].name == name) return i;
  }
  return std::nullopt;
}

bool ScoreMatrix::has_model(std::string_view model) const {
  return row_index_.contains(std::string(model));
}

const ScoreRow& ScoreMatrix::row(std::string_view model) const {
  auto it = row_index_.find(std::string(model));
  if (it == row_index_.end()) {
    throw ConfigError("unknown model '" + std::string(model) + "'");
  }
  return rows_[it->second];
}

std::vector<std::string> ScoreMatrix::machine_models() const {
  std::vector<std::string> out;
  for (const auto& r : rows_) {
    if (r.model != human_row_) out.push_back(r.model);
  }
  return out;
}

std::vector<MetricInfo> LoadMetricDirections(
    const std::filesystem::path& path) {
  auto in = OpenInput(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError(path.string() + ": expected an object of directions");
  }
  std::vector<MetricInfo> out;
  for (const auto& [name, dir] : doc.items()) {
    if (!dir.is_string()) {
      throw ConfigError(path.string() + ": direction for '" + name +
                        "' must be a string");
    }
    out.push_back({name, ParseDirection(dir.get<std::string>())});
  }
  return out;
}

ScoreMatrix ParseScoreMatrixCsv(std::istream& in, const std::string& source,
                                const std::string& human_row,
                                const std::vector<MetricInfo>& directions) {
  const auto records = ReadCsv(in, source);
  if (records.empty()) throw ParseError(source, 0, "empty score file");
  const auto& header = records.front();
  if (header.fields.size() < 2 || Lower(Trim(header.fields[0])) != "model") {
    throw ParseError(source, header.line,
                     "header must start with 'model' followed by metrics");
  }

  std::vector<MetricInfo> metrics;
  for (size_t c = 1; c < header.fields.size(); ++c) {
    MetricInfo info;
    info.name = std::string(Trim(header.fields[c]));
    if (info.name.empty()) {
      throw ParseError(source, header.line, "empty metric name in header");
    }
    info.direction = DefaultDirection(info.name);
    for (const auto& d : directions) {
      if (d.name == info.name) info.direction = d.direction;
    }
    metrics.push_back(std::move(info));
  }

  std::vector<ScoreRow> rows;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw ParseError(source, rec.line,
                       "expected " + std::to_string(header.fields.size()) +
                           " fields, got " + std::to_string(rec.fields.size()));
    }
    ScoreRow row;
    row.model = std::string(Trim(rec.fields[0]));
    if (row.model.empty()) throw ParseError(source, rec.line, "empty model");
    for (size_t c = 1; c < rec.fields.size(); ++c) {
      row.values.push_back(
          ParseCell(rec.fields[c], source, rec.line, metrics[c - 1].name));
    }
    rows.push_back(std::move(row));
  }
  try {
    return ScoreMatrix(std::move(metrics), std::move(rows), human_row);
  } catch (const ConfigError&) {
    throw;
  } catch (const DataError& e) {
    throw ParseError(source, 0, e.what());
  }
}

ScoreMatrix ParseScoreMatrixJson(std::istream& in, const std::string& source,
                                 const std::string& human_row) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<MetricInfo> metrics;
    for (const auto& m : doc.at("metrics")) {
      MetricInfo info;
      info.name = m.at("name").get<std::string>();
      info.direction = m.contains("direction")
                           ? ParseDirection(m["direction"].get<std::string>())
                           : DefaultDirection(info.name);
      metrics.push_back(std::move(info));
    }
    std::vector<ScoreRow> rows;
    for (const auto& r : doc.at("rows")) {
      ScoreRow row;
      row.model = r.at("model").get<std::string>();
      const auto& values = r.at("values");
      for (const auto& m : metrics) {
        auto it = values.find(m.name);
        if (it == values.end() || it->is_null()) {
          row.values.push_back(std::nullopt);
        } else if (it->is_number()) {
          row.values.push_back(it->get<double>());
        } else {
          throw ParseError(source, 0, "non-numeric value for '" + m.name +
                                          "' in row '" + row.model + "'");
        }
      }
      rows.push_back(std::move(row));
    }
    return ScoreMatrix(std::move(metrics), std::move(rows), human_row);
  } catch (const json::exception& e) {
    throw ParseError(source, 0, e.what());
  }
}

ScoreMatrix LoadScoreMatrix(const std::filesystem::path& path,
                            const std::string& human_row,
                            const std::optional<std::filesystem::path>& sidecar) {
  auto in = OpenInput(path);
  if (path.extension() == ".json") {
    return ParseScoreMatrixJson(in, path.string(), human_row);
  }
  std::vector<MetricInfo> directions;
  if (sidecar) {
    directions = LoadMetricDirections(*sidecar);
  } else {
    const auto implicit = path.parent_path() / "metrics.json";
    if (std::filesystem::exists(implicit)) {
      directions = LoadMetricDirections(implicit);
    }
  }
  return ParseScoreMatrixCsv(in, path.string(), human_row, directions);
}

void WriteScoreMatrixCsv(std::ostream& out, const ScoreMatrix& matrix) {
  std::vector<std::string> header = {"model"};
  for (const auto& m : matrix.metrics()) header.push_back(m.name);
  out << CsvJoin(header) << '\n';
  for (const auto& row : matrix.rows()) {
    std::vector<std::string> fields = {row.model};
    for (const auto& v : row.values) {
      fields.push_back(v ? FormatExact(*v) : std::string());
    }
    out << CsvJoin(fields) << '\n';
  }
}

void WriteScoreMatrixJson(std::ostream& out, const ScoreMatrix& matrix) {
  json doc;
  doc["human_row"] = matrix.human_row();
  doc["metrics"] = json::array();
  for (const auto& m : matrix.metrics()) {
    doc["metrics"].push_back(
        {{"name", m.name}, {"direction", DirectionName(m.direction)}});
  }
  doc["rows"] = json::array();
  for (const auto& row : matrix.rows()) {
    json values = json::object();
    for (size_t i = 0; i < row.values.size(); ++i) {
      const auto& name = matrix.metrics()[i].name;
      values[name] = row.values[i] ? json(*row.values[i]) : json(nullptr);
    }
    doc["rows"].push_back({{"model", row.model}, {"values", values}});
  }
  out << doc.dump(2) << '\n';
}

std::vector<RankingRecord> ParseRankings(std::istream& in,
                                         const std::string& source) {
  const auto records = ReadCsv(in, source);
  if (records.empty()) return {};

  const auto& header = records.front();
  std::map<std::string, size_t> column;
  for (size_t c = 0; c < header.fields.size(); ++c) {
    column[Lower(Trim(header.fields[c]))] = c;
  }
  for (const char* required :
       {"evaluator_id", "item_id", "criterion", "model", "rank"}) {
    if (!column.contains(required)) {
      throw ParseError(source, header.line,
                       std::string("missing column '") + required + "'");
    }
  }
  const auto source_col = column.find("evaluator_source");

  std::vector<RankingRecord> out;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw ParseError(source, rec.line,
                       "expected " + std::to_string(header.fields.size()) +
                           " fields, got " + std::to_string(rec.fields.size()));
    }
    auto field = [&](const char* name) {
      return std::string(Trim(rec.fields[column.at(name)]));
    };
    RankingRecord record;
    record.evaluator_id = field("evaluator_id");
    record.item_id = field("item_id");
    record.criterion = field("criterion");
    record.model = field("model");
    if (source_col != column.end()) {
      record.source = std::string(Trim(rec.fields[source_col->second]));
    }
    if (record.evaluator_id.empty() || record.item_id.empty() ||
        record.criterion.empty() || record.model.empty() ||
        record.source.empty()) {
      throw ParseError(source, rec.line, "empty key field");
    }
    const std::string rank_text = field("rank");
    int rank = 0;
    size_t consumed = 0;
    try {
      rank = std::stoi(rank_text, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed == 0 || consumed != rank_text.size()) {
      throw ParseError(source, rec.line, "rank '" + rank_text +
                                             "' is not an integer");
    }
    if (rank < 1) {
      throw IntegrityError(source + ":" + std::to_string(rec.line) +
                           ": rank must be >= 1");
    }
    record.rank = rank;
    out.push_back(std::move(record));
  }
  ValidateRankings(out);
  return out;
}

std::vector<RankingRecord> LoadRankings(const std::filesystem::path& path) {
  auto in = OpenInput(path);
  return ParseRankings(in, path.string());
}

void ValidateRankings(std::span<const RankingRecord> records) {
  using GroupKey = std::tuple<std::string, std::string, std::string>;
  struct Group {
    std::set<std::string> models;
    std::vector<int> ranks;
  };
  std::map<GroupKey, Group> groups;
  for (const auto& r : records) {
    auto& g = groups[{r.evaluator_id, r.item_id, r.criterion}];
    if (!g.models.insert(r.model).second) {
      throw IntegrityError("evaluator '" + r.evaluator_id + "' item '" +
                           r.item_id + "' criterion '" + r.criterion +
                           "' ranks model '" + r.model + "' twice");
    }
    g.ranks.push_back(r.rank);
  }

  std::map<std::string, const std::set<std::string>*> criterion_models;
  for (auto& [key, g] : groups) {
    const auto& [evaluator, item, criterion] = key;
    const std::string where = "evaluator '" + evaluator + "' item '" + item +
                              "' criterion '" + criterion + "'";
    std::sort(g.ranks.begin(), g.ranks.end());
    const int k = static_cast<int>(g.ranks.size());
    for (int i = 0; i < k; ++i) {
      if (g.ranks[i] < 1 || g.ranks[i] > k) {
        throw IntegrityError(where + ": rank " + std::to_string(g.ranks[i]) +
                             " outside 1.." + std::to_string(k));
      }
      if (i > 0 && g.ranks[i] == g.ranks[i - 1]) {
        throw IntegrityError(where + ": duplicate rank " +
                             std::to_string(g.ranks[i]));
      }
    }
    auto [it, inserted] = criterion_models.emplace(criterion, &g.models);
    if (!inserted && *it->second != g.models) {
      throw IntegrityError(where + ": incomplete ballot (model set differs "
                           "from other ballots for this criterion)");
    }
  }
}

}  // namespace storyeval
