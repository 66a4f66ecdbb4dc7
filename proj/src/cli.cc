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

#include "storyeval/cli.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "storyeval/corpus.h"
#include "storyeval/errors.h"
#include "storyeval/postag.h"
#include "storyeval/ranks.h"
#include "storyeval/textstats.h"

namespace storyeval {
namespace {

OutputFormat ResolveFormat(const RunConfig& config, OutputFormat fallback) {
  if (config.format) return *config.format;
  if (config.out) {
    const auto ext = config.out->extension().string();
    if (ext == ".csv") return OutputFormat::kCsv;
    if (ext == ".json") return OutputFormat::kJson;
    if (ext == ".md") return OutputFormat::kMarkdown;
  }
  return fallback;
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + path.string());
  file << text;
  if (!file) throw DataError("write failed for " + path.string());
}

void Emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out) {
    WriteFile(*config.out, text);
  } else {
    out << text;
  }
}

ScoreMatrix LoadScores(const RunConfig& config) {
  return LoadScoreMatrix(*config.scores, config.human_row,
                         config.metrics_sidecar);
}

void RunStats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::map<std::string, ModelCorpus> merged;
  for (const auto& path : config.inputs) {
    for (auto& corpus : LoadStories(path)) {
      auto& target = merged[corpus.model];
      target.model = corpus.model;
      for (auto& s : corpus.stories) target.stories.push_back(std::move(s));
    }
  }

  std::unique_ptr<LexiconTagger> tagger =
      config.tagger_lexicon
          ? std::make_unique<LexiconTagger>(
                LexiconTagger::WithOverrides(*config.tagger_lexicon))
          : std::make_unique<LexiconTagger>();

  std::vector<CorpusLexStats> stats;
  std::vector<PosProfile> profiles;
  for (const auto& [model, corpus] : merged) {
    stats.push_back(ComputeCorpusStats(corpus));
    profiles.push_back(ComputePosProfile(corpus, *tagger));
  }

  const auto format = ResolveFormat(config, OutputFormat::kMarkdown);
  if (format == OutputFormat::kJson) {
    Emit(config, out, LexicalStatsJson(stats, profiles));
    return;
  }
  auto rows = LexicalRows(stats, profiles);
  const auto metrics = LexicalMetrics();
  if (format == OutputFormat::kMarkdown && merged.contains(config.human_row)) {
    ScoreMatrix matrix(metrics, std::move(rows), config.human_row);
    ReportSpec spec;
    spec.digits = config.digits.value_or(2);
    const auto report = Render(matrix, spec);
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    Emit(config, out, report.markdown);
    return;
  }
  // CSV keeps exact values so the file feeds `ideality` losslessly.
  const auto digits = format == OutputFormat::kMarkdown
                          ? std::optional<int>(config.digits.value_or(2))
                          : config.digits;
  Emit(config, out, RenderPlainTable(metrics, rows, format, digits));
}

void RunIdeality(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
  const auto matrix = LoadScores(config);
  IdealityOptions options;
  options.standardize_gaps = config.standardize_gaps;
  std::vector<IdealityScore> scores;
  for (const auto& model : matrix.machine_models()) {
    if (auto s = Ideality(matrix, model, options)) {
      scores.push_back(std::move(*s));
    } else {
      err << "warning: model '" << model
          << "' shares no metric with the human row; skipped\n";
    }
  }
  Emit(config, out,
       RenderIdeality(std::move(scores), config.normalize,
                      ResolveFormat(config, OutputFormat::kCsv)));
}

void RunWeightedIdeality(const RunConfig& config, std::ostream& out,
                         std::ostream& err) {
  const auto matrix = LoadScores(config);
  std::vector<std::string> models = config.models;
  if (models.empty()) {
    for (const auto& m : matrix.machine_models()) {
      const auto& values = matrix.row(m).values;
      const bool complete = std::all_of(values.begin(), values.end(),
                                        [](const auto& v) { return v.has_value(); });
      if (!config.complete_only || complete) models.push_back(m);
    }
  }
  if (models.empty()) throw ConfigError("no models to score");

  McConfig mc;
  mc.runs = config.runs;
  mc.kind = config.norm;
  mc.seed = *config.seed;
  mc.options.standardize_gaps = config.standardize_gaps;
  const auto runs = MonteCarlo(matrix, models, mc);
  const auto dist = EmitMcDistribution(runs);
  Emit(config, out, dist.csv);

  std::optional<std::filesystem::path> summary = config.summary_out;
  if (!summary && config.out) {
    summary = config.out->string() + ".summary.json";
  }
  if (summary) {
    WriteFile(*summary, dist.summary_json);
  } else {
    err << dist.summary_json;
  }
}

void RunRanks(const RunConfig& config, std::ostream& out, std::ostream&) {
  std::vector<RankingRecord> records;
  for (const auto& path : config.inputs) {
    auto part = LoadRankings(path);
    records.insert(records.end(), part.begin(), part.end());
  }
  if (config.inputs.size() > 1) ValidateRankings(records);
  const auto table = MeanRanks(records, config.split_by_source);
  Emit(config, out,
       RenderRankTable(table, ResolveFormat(config, OutputFormat::kMarkdown)));
}

void RunReport(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto matrix = LoadScores(config);
  ReportSpec spec;
  spec.columns = config.columns;
  spec.digits = config.digits;
  const auto report = Render(matrix, spec);
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  switch (ResolveFormat(config, OutputFormat::kMarkdown)) {
    case OutputFormat::kMarkdown:
      Emit(config, out, report.markdown);
      break;
    case OutputFormat::kCsv:
      Emit(config, out, report.csv);
      break;
    case OutputFormat::kJson:
      Emit(config, out, report.json);
      break;
  }
  if (config.highlights_out) {
    WriteFile(*config.highlights_out, report.highlights_json);
  }
}

}  // namespace

void ValidateConfig(const RunConfig& config) {
  switch (config.subcommand) {
    case Subcommand::kStats:
    case Subcommand::kRanks:
      if (config.inputs.empty()) throw ConfigError("--input is required");
      break;
    case Subcommand::kWeightedIdeality:
      if (!config.seed) {
        throw ConfigError("weighted-ideality requires an explicit --seed");
      }
      if (config.runs == 0) throw ConfigError("--runs must be >= 1");
      [[fallthrough]];
    case Subcommand::kIdeality:
    case Subcommand::kReport:
      if (!config.scores) throw ConfigError("--scores is required");
      break;
  }
}

void Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ValidateConfig(config);
  switch (config.subcommand) {
    case Subcommand::kStats: return RunStats(config, out, err);
    case Subcommand::kIdeality: return RunIdeality(config, out, err);
    case Subcommand::kWeightedIdeality:
      return RunWeightedIdeality(config, out, err);
    case Subcommand::kRanks: return RunRanks(config, out, err);
    case Subcommand::kReport: return RunReport(config, out, err);
  }
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Lexical statistics and human-likeness (ideality) scoring "
               "for story corpora"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig config;
  std::string out_path, format, seed_text;
  app.add_option("--out,-o", out_path, "Output file (default: stdout)");
  app.add_option("--format", format, "md | csv | json");
  app.add_option("--seed", seed_text, "Random seed (weighted-ideality)");

  std::vector<std::string> inputs;
  std::string scores, metrics, lexicon, norm = "l1", summary, highlights;
  std::string split_by;
  int digits = -1;

  auto* stats = app.add_subcommand("stats", "Lexical statistics per model");
  stats->add_option("--input,-i", inputs, "stories.jsonl (repeatable)")
      ->required();
  stats->add_option("--tagger-lexicon", lexicon,
                    "word<TAB>tag file overriding the embedded POS lexicon");
  stats->add_option("--human-row", config.human_row,
                    "Model used as human baseline in markdown highlights");
  stats->add_option("--digits", digits, "Decimals in formatted tables");

  auto* ideality = app.add_subcommand("ideality", "Unweighted ideality");
  ideality->add_option("--scores", scores, "Score matrix (CSV or JSON)")
      ->required();
  ideality->add_option("--human-row", config.human_row, "Baseline row")
      ->required();
  ideality->add_option("--metrics", metrics, "metrics.json direction sidecar");
  ideality->add_flag("--normalize", config.normalize,
                     "Rank by ideality per evaluated metric");
  ideality->add_flag("--standardize-gaps", config.standardize_gaps,
                     "Divide gaps by the metric's spread (non-default)");

  auto* weighted = app.add_subcommand(
      "weighted-ideality", "Monte-Carlo weighted ideality over random weights");
  weighted->add_option("--scores", scores, "Score matrix (CSV or JSON)")
      ->required();
  weighted->add_option("--human-row", config.human_row, "Baseline row");
  weighted->add_option("--metrics", metrics, "metrics.json direction sidecar");
  weighted->add_option("--runs", config.runs, "Number of weight draws");
  weighted->add_option("--norm", norm, "l1 | l2");
  weighted->add_option("--models", config.models,
                       "Models to score (default: all machine rows)")
      ->delimiter(',');
  weighted->add_flag("--complete-only", config.complete_only,
                     "Only models scored on every metric");
  weighted->add_flag("--standardize-gaps", config.standardize_gaps,
                     "Divide gaps by the metric's spread (non-default)");
  weighted->add_option("--summary", summary,
                       "Summary JSON (default: <out>.summary.json)");

  auto* ranks = app.add_subcommand("ranks", "Average-position tables");
  ranks->add_option("--input,-i", inputs, "rankings.csv (repeatable)")
      ->required();
  ranks->add_option("--split-by", split_by, "evaluator_source");

  auto* report = app.add_subcommand("report", "Render a score matrix");
  report->add_option("--scores", scores, "Score matrix (CSV or JSON)")
      ->required();
  report->add_option("--human-row", config.human_row, "Baseline row");
  report->add_option("--metrics", metrics, "metrics.json direction sidecar");
  report->add_option("--columns", config.columns, "Subset of metric columns")
      ->delimiter(',');
  report->add_option("--highlights", highlights,
                     "Write highlights.json next to the table");
  report->add_option("--digits", digits, "Fixed decimals (default: exact)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (app.got_subcommand(stats)) config.subcommand = Subcommand::kStats;
    if (app.got_subcommand(ideality)) config.subcommand = Subcommand::kIdeality;
    if (app.got_subcommand(weighted)) {
      config.subcommand = Subcommand::kWeightedIdeality;
    }
    if (app.got_subcommand(ranks)) config.subcommand = Subcommand::kRanks;
    if (app.got_subcommand(report)) config.subcommand = Subcommand::kReport;

    for (const auto& i : inputs) config.inputs.emplace_back(i);
    if (!scores.empty()) config.scores = scores;
    if (!metrics.empty()) config.metrics_sidecar = metrics;
    if (!lexicon.empty()) config.tagger_lexicon = lexicon;
    if (!out_path.empty()) config.out = out_path;
    if (!summary.empty()) config.summary_out = summary;
    if (!highlights.empty()) config.highlights_out = highlights;
    if (!format.empty()) config.format = ParseOutputFormat(format);
    if (digits >= 0) config.digits = digits;
    config.norm = ParseNormKind(norm);
    if (!split_by.empty()) {
      if (split_by != "evaluator_source") {
        throw ConfigError("--split-by supports only evaluator_source");
      }
      config.split_by_source = true;
    }
    if (!seed_text.empty()) {
      size_t consumed = 0;
      unsigned long long seed = 0;
      try {
        seed = std::stoull(seed_text, &consumed);
      } catch (const std::exception&) {
        consumed = 0;
      }
      if (consumed == 0 || consumed != seed_text.size() ||
          seed_text.front() == '-') {
        throw ConfigError("--seed must be a nonnegative integer");
      }
      config.seed = seed;
    }
    Run(config, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace storyeval
