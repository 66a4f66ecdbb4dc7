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

#include "storyeval/report.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "storyeval/csv.h"
#include "storyeval/errors.h"
#include "storyeval/numeric.h"

namespace storyeval {
namespace {

using json = nlohmann::json;

struct LexicalColumn {
  const char* name;
  const char* label;
};

constexpr LexicalColumn kLexicalColumns[] = {
    {"avg_story_len", "Avg. Story Length"},
    {"avg_sent_len", "Avg. Sent. Length"},
    {"vocab_per_n", "\\|V\\|/n"},
    {"tokens_per_n", "N_tok/n"},
    {"ttr", "TTR"},
    {"pct_nouns", "(%) Nouns"},
    {"pct_verbs", "(%) Verbs"},
    {"pct_pronouns", "(%) Pronouns"},
    {"pct_adj", "(%) ADJ"},
    {"rep_1", "rep_1"},
    {"rep_2", "rep_2"},
    {"rep_3", "rep_3"},
    {"rep_4", "rep_4"},
    {"diversity", "Diversity"},
    {"yules_k", "K"},
    {"entropy", "H"},
};

std::string FormatValue(double v, std::optional<int> digits) {
  return digits ? FormatFixed(v, *digits) : FormatExact(v);
}

json OptionalJson(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string Arrow(Direction d) {
  return d == Direction::kHigherBetter ? " ↑" : " ↓";
}

bool Contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::string MarkdownRow(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string MarkdownRule(size_t columns) {
  std::string out = "|---|";
  for (size_t i = 1; i < columns; ++i) out += "---:|";
  return out + "\n";
}

}  // namespace

OutputFormat ParseOutputFormat(std::string_view text) {
  if (text == "md" || text == "markdown") return OutputFormat::kMarkdown;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format '" + std::string(text) +
                    "' (expected md, csv or json)");
}

const std::vector<std::string>& LexicalMetricNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : kLexicalColumns) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

std::string MetricLabel(std::string_view name) {
  for (const auto& c : kLexicalColumns) {
    if (name == c.name) return c.label;
  }
  return std::string(name);
}

std::vector<MetricInfo> LexicalMetrics() {
  std::vector<MetricInfo> out;
  for (const auto& name : LexicalMetricNames()) {
    out.push_back({name, DefaultDirection(name)});
  }
  return out;
}

std::vector<ScoreRow> LexicalRows(std::span<const CorpusLexStats> stats,
                                  std::span<const PosProfile> profiles) {
  std::vector<ScoreRow> rows;
  for (size_t i = 0; i < stats.size(); ++i) {
    const auto& s = stats[i];
    const auto& p = profiles[i];
    rows.push_back(ScoreRow{
        s.model,
        {s.avg_story_len, s.avg_sent_len, s.vocab_per_n, s.tokens_per_n,
         s.ttr_pct, p.pct_noun, p.pct_verb, p.pct_pron, p.pct_adj, s.rep[0],
         s.rep[1], s.rep[2], s.rep[3], s.diversity_pct, s.yules_k_avg,
         s.entropy_avg}});
  }
  return rows;
}

std::string LexicalStatsJson(std::span<const CorpusLexStats> stats,
                             std::span<const PosProfile> profiles) {
  json out = json::array();
  for (size_t i = 0; i < stats.size(); ++i) {
    const auto& s = stats[i];
    const auto& p = profiles[i];
    json rep = json::array();
    for (const auto& r : s.rep) rep.push_back(OptionalJson(r));
    out.push_back({{"model", s.model},
                   {"n", s.n},
                   {"vocab_size", s.vocab_size},
                   {"token_count", s.token_count},
                   {"avg_story_len", s.avg_story_len},
                   {"avg_sent_len", s.avg_sent_len},
                   {"vocab_per_n", s.vocab_per_n},
                   {"tokens_per_n", s.tokens_per_n},
                   {"ttr_pct", OptionalJson(s.ttr_pct)},
                   {"rep", rep},
                   {"diversity_pct", OptionalJson(s.diversity_pct)},
                   {"yules_k_avg", OptionalJson(s.yules_k_avg)},
                   {"entropy_avg", OptionalJson(s.entropy_avg)},
                   {"pos",
                    {{"pct_noun", p.pct_noun},
                     {"pct_verb", p.pct_verb},
                     {"pct_pron", p.pct_pron},
                     {"pct_adj", p.pct_adj}}}});
  }
  return out.dump(2) + "\n";
}

ColumnHighlight ComputeHighlight(const ScoreMatrix& matrix, size_t metric) {
  ColumnHighlight h;
  h.metric = matrix.metrics().at(metric).name;
  h.direction = matrix.metrics()[metric].direction;

  std::vector<double> values;
  for (const auto& row : matrix.rows()) {
    if (row.values[metric]) values.push_back(*row.values[metric]);
  }
  if (h.direction == Direction::kHigherBetter) {
    std::sort(values.begin(), values.end(), std::greater<>());
  } else {
    std::sort(values.begin(), values.end());
  }
  values.erase(std::unique(values.begin(), values.end()), values.end());

  for (const auto& row : matrix.rows()) {
    const auto& v = row.values[metric];
    if (!v) continue;
    if (!values.empty() && *v == values[0]) h.best.push_back(row.model);
    if (values.size() > 1 && *v == values[1]) h.second.push_back(row.model);
  }
  h.closest = ClosestToHuman(matrix, metric);
  return h;
}

RenderedReport Render(const ScoreMatrix& matrix, const ReportSpec& spec) {
  RenderedReport out;
  std::vector<size_t> requested;
  if (spec.columns.empty()) {
    for (size_t j = 0; j < matrix.metric_count(); ++j) requested.push_back(j);
  } else {
    for (const auto& name : spec.columns) {
      auto idx = matrix.metric_index(name);
      if (!idx) throw ConfigError("unknown column '" + name + "'");
      requested.push_back(*idx);
    }
  }

  std::vector<size_t> columns;
  for (size_t j : requested) {
    const bool any = std::any_of(
        matrix.rows().begin(), matrix.rows().end(),
        [&](const ScoreRow& r) { return r.values[j].has_value(); });
    const auto& name = matrix.metrics()[j].name;
    if (!any) {
      out.warnings.push_back("column '" + name +
                             "' has no values and was omitted");
      continue;
    }
    columns.push_back(j);
    out.columns.push_back(name);
    out.highlights.push_back(ComputeHighlight(matrix, j));
  }

  // Markdown.
  std::ostringstream md;
  std::vector<std::string> header = {"Model"};
  for (size_t j : columns) {
    header.push_back(MetricLabel(matrix.metrics()[j].name) +
                     Arrow(matrix.metrics()[j].direction));
  }
  md << MarkdownRow(header) << MarkdownRule(header.size());
  for (const auto& row : matrix.rows()) {
    std::vector<std::string> cells = {row.model};
    for (size_t c = 0; c < columns.size(); ++c) {
      const auto& v = row.values[columns[c]];
      if (!v) {
        cells.push_back("-");
        continue;
      }
      const auto& h = out.highlights[c];
      std::string cell = FormatValue(*v, spec.digits);
      if (spec.mark_best) {
        if (Contains(h.best, row.model)) {
          cell = "**" + cell + "**";
        } else if (Contains(h.second, row.model)) {
          cell = "_" + cell + "_";
        }
      }
      if (spec.mark_closest && h.closest && Contains(h.closest->tied, row.model)) {
        cell += " [ch]";
      }
      cells.push_back(cell);
    }
    md << MarkdownRow(cells);
  }
  out.markdown = md.str();

  // CSV, unstyled.
  std::ostringstream csv;
  std::vector<std::string> csv_header = {"model"};
  for (size_t j : columns) csv_header.push_back(matrix.metrics()[j].name);
  csv << CsvJoin(csv_header) << '\n';
  for (const auto& row : matrix.rows()) {
    std::vector<std::string> fields = {row.model};
    for (size_t j : columns) {
      const auto& v = row.values[j];
      fields.push_back(v ? FormatValue(*v, spec.digits) : std::string());
    }
    csv << CsvJoin(fields) << '\n';
  }
  out.csv = csv.str();

  // Highlights sidecar.
  json hl = json::object();
  hl["human_row"] = matrix.human_row();
  hl["columns"] = json::array();
  for (const auto& h : out.highlights) {
    json col = {{"metric", h.metric},
                {"direction", DirectionName(h.direction)},
                {"best", h.best},
                {"second", h.second}};
    if (h.closest) {
      col["closest_to_human"] = {{"model", h.closest->model},
                                 {"gap", h.closest->gap},
                                 {"tied", h.closest->tied}};
    } else {
      col["closest_to_human"] = nullptr;
    }
    hl["columns"].push_back(std::move(col));
  }
  hl["warnings"] = out.warnings;
  out.highlights_json = hl.dump(2) + "\n";

  // JSON: the score-matrix layout restricted to kept columns, values exact.
  json doc;
  doc["human_row"] = matrix.human_row();
  doc["metrics"] = json::array();
  for (size_t j : columns) {
    doc["metrics"].push_back(
        {{"name", matrix.metrics()[j].name},
         {"direction", DirectionName(matrix.metrics()[j].direction)}});
  }
  doc["rows"] = json::array();
  for (const auto& row : matrix.rows()) {
    json values = json::object();
    for (size_t j : columns) {
      values[matrix.metrics()[j].name] = OptionalJson(row.values[j]);
    }
    doc["rows"].push_back({{"model", row.model}, {"values", values}});
  }
  doc["highlights"] = hl["columns"];
  out.json = doc.dump(2) + "\n";
  return out;
}

std::string RenderPlainTable(std::span<const MetricInfo> metrics,
                             std::span<const ScoreRow> rows,
                             OutputFormat format, std::optional<int> digits) {
  std::ostringstream os;
  if (format == OutputFormat::kMarkdown) {
    std::vector<std::string> header = {"Model"};
    for (const auto& m : metrics) {
      header.push_back(MetricLabel(m.name) + Arrow(m.direction));
    }
    os << MarkdownRow(header) << MarkdownRule(header.size());
    for (const auto& row : rows) {
      std::vector<std::string> cells = {row.model};
      for (const auto& v : row.values) {
        cells.push_back(v ? FormatValue(*v, digits) : "-");
      }
      os << MarkdownRow(cells);
    }
    return os.str();
  }
  std::vector<std::string> header = {"model"};
  for (const auto& m : metrics) header.push_back(m.name);
  os << CsvJoin(header) << '\n';
  for (const auto& row : rows) {
    std::vector<std::string> fields = {row.model};
    for (const auto& v : row.values) {
      fields.push_back(v ? FormatValue(*v, digits) : std::string());
    }
    os << CsvJoin(fields) << '\n';
  }
  return os.str();
}

std::string RenderIdeality(std::vector<IdealityScore> scores, bool normalized,
                           OutputFormat format) {
  std::stable_sort(scores.begin(), scores.end(),
                   [&](const IdealityScore& a, const IdealityScore& b) {
                     const double x = normalized ? a.normalized : a.raw;
                     const double y = normalized ? b.normalized : b.raw;
                     if (x != y) return x > y;
                     return a.model < b.model;
                   });
  std::ostringstream os;
  switch (format) {
    case OutputFormat::kJson: {
      json out = json::array();
      for (size_t i = 0; i < scores.size(); ++i) {
        const auto& s = scores[i];
        out.push_back({{"rank", i + 1},
                       {"model", s.model},
                       {"raw", s.raw},
                       {"evaluated_metrics", s.evaluated_metrics},
                       {"normalized", s.normalized}});
      }
      os << out.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      os << "rank,model,raw,evaluated_metrics,normalized\n";
      for (size_t i = 0; i < scores.size(); ++i) {
        const auto& s = scores[i];
        os << CsvJoin({std::to_string(i + 1), s.model, FormatExact(s.raw),
                       std::to_string(s.evaluated_metrics),
                       FormatExact(s.normalized)})
           << '\n';
      }
      break;
    case OutputFormat::kMarkdown:
      os << MarkdownRow({"Rank", "Model", "Ideality", "Metrics", "Normalized"})
         << MarkdownRule(5);
      for (size_t i = 0; i < scores.size(); ++i) {
        const auto& s = scores[i];
        os << MarkdownRow({std::to_string(i + 1), s.model,
                           FormatFixed(s.raw, 4),
                           std::to_string(s.evaluated_metrics),
                           FormatFixed(s.normalized, 4)});
      }
      break;
  }
  return os.str();
}

McDistribution EmitMcDistribution(std::span<const McRun> runs) {
  if (runs.empty()) throw DataError("no Monte-Carlo runs to summarize");
  McDistribution out;
  std::ostringstream csv;
  csv << "run,model,score\n";
  std::vector<std::string> order;
  std::map<std::string, std::vector<double>> samples;
  for (const auto& run : runs) {
    for (const auto& s : run.scores) {
      if (!samples.contains(s.model)) order.push_back(s.model);
      auto& bucket = samples[s.model];
      csv << run.run_index << ',' << CsvEscape(s.model) << ',';
      if (s.score) {
        csv << FormatExact(*s.score);
        bucket.push_back(*s.score);
      }
      csv << '\n';
    }
  }
  out.csv = csv.str();

  json summary;
  summary["runs"] = runs.size();
  summary["norm"] = NormKindName(runs.front().kind);
  summary["seed"] = runs.front().seed;
  summary["models"] = json::array();
  for (const auto& model : order) {
    const auto& values = samples[model];
    json entry = {{"model", model}, {"count", values.size()}};
    if (!values.empty()) {
      const auto s = Summarize(values);
      entry["min"] = s.min;
      entry["q1"] = s.q1;
      entry["median"] = s.median;
      entry["q3"] = s.q3;
      entry["max"] = s.max;
      entry["mean"] = s.mean;
      entry["iqr"] = s.q3 - s.q1;
    }
    summary["models"].push_back(std::move(entry));
  }
  out.summary_json = summary.dump(2) + "\n";
  return out;
}

std::string RenderRankTable(const RankTable& table, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::kCsv) {
    os << "group,criterion,model,mean_rank,count\n";
    for (const auto& [group, criteria] : table.groups) {
      for (const auto& [criterion, cells] : criteria) {
        for (const auto& [model, cell] : cells) {
          os << CsvJoin({group, criterion, model, FormatExact(cell.mean),
                         std::to_string(cell.count)})
             << '\n';
        }
      }
    }
    return os.str();
  }
  if (format == OutputFormat::kJson) {
    json out = json::object();
    for (const auto& [group, criteria] : table.groups) {
      for (const auto& [criterion, cells] : criteria) {
        for (const auto& [model, cell] : cells) {
          out[group][criterion][model] = {{"mean_rank", cell.mean},
                                          {"count", cell.count}};
        }
      }
    }
    os << out.dump(2) << '\n';
    return os.str();
  }

  for (const auto& [group, criteria] : table.groups) {
    if (table.groups.size() > 1) os << "### " << group << "\n\n";
    std::vector<std::string> models;
    for (const auto& [criterion, cells] : criteria) {
      for (const auto& [model, cell] : cells) {
        if (!Contains(models, model)) models.push_back(model);
      }
    }
    std::sort(models.begin(), models.end());
    std::vector<std::string> header = {"Model"};
    for (const auto& [criterion, cells] : criteria) {
      header.push_back(criterion + " ↓");
    }
    os << MarkdownRow(header) << MarkdownRule(header.size());
    for (const auto& model : models) {
      std::vector<std::string> cells_out = {model};
      for (const auto& [criterion, cells] : criteria) {
        auto it = cells.find(model);
        if (it == cells.end()) {
          cells_out.push_back("-");
          continue;
        }
        // Distinct means, best first.
        std::vector<double> means;
        for (const auto& [m, c] : cells) means.push_back(c.mean);
        std::sort(means.begin(), means.end());
        means.erase(std::unique(means.begin(), means.end()), means.end());
        std::string cell = FormatFixed(it->second.mean, 2);
        if (it->second.mean == means[0]) {
          cell = "**" + cell + "**";
        } else if (means.size() > 1 && it->second.mean == means[1]) {
          cell = "_" + cell + "_";
        }
        cells_out.push_back(cell);
      }
      os << MarkdownRow(cells_out);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace storyeval
