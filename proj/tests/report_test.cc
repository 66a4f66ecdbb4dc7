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
#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "storyeval/errors.h"
#include "storyeval/numeric.h"
#include "test_util.h"

namespace storyeval {
namespace {

using json = nlohmann::json;

const ColumnHighlight& Find(const RenderedReport& r, const std::string& metric) {
  for (const auto& h : r.highlights) {
    if (h.metric == metric) return h;
  }
  throw std::runtime_error("no highlight for " + metric);
}

TEST(Render, PublishedStoryLengthHighlights) {
  const auto report = Render(testing::LoadLexicalScores(), {});
  const auto& h = Find(report, "avg_story_len");
  EXPECT_EQ(h.best, std::vector<std::string>{"StoryLLaVA"});
  EXPECT_EQ(h.second, std::vector<std::string>{"Transf.+BART"});
  EXPECT_EQ(h.closest->model, "Transf.+BART");
  EXPECT_NE(report.markdown.find("| StoryLLaVA | **160.7** |"), std::string::npos);
  EXPECT_NE(report.markdown.find("| Transf.+BART | _60.2_ [ch] |"),
            std::string::npos);
  EXPECT_TRUE(report.warnings.empty());
  EXPECT_EQ(report.columns.size(), 16u);
  // Lower-better columns rank the smallest value first.
  EXPECT_EQ(Find(report, "rep_1").direction, Direction::kLowerBetter);
}

TEST(Render, OneRowTable) {
  const ScoreMatrix matrix({{"a"}, {"b", Direction::kLowerBetter}},
                           {{"H", {1.0, 2.0}}}, "H");
  const auto report = Render(matrix, {});
  for (const auto& h : report.highlights) {
    EXPECT_EQ(h.best, std::vector<std::string>{"H"});
    EXPECT_TRUE(h.second.empty());
    EXPECT_FALSE(h.closest);
  }
}

TEST(Render, AllMissingColumnIsDropped) {
  const ScoreMatrix matrix({{"a"}, {"empty"}},
                           {{"H", {1.0, std::nullopt}}, {"M", {2.0, std::nullopt}}},
                           "H");
  const auto report = Render(matrix, {});
  EXPECT_EQ(report.columns, std::vector<std::string>{"a"});
  ASSERT_EQ(report.warnings.size(), 1u);
  EXPECT_NE(report.warnings[0].find("empty"), std::string::npos);
  EXPECT_EQ(report.markdown.find("empty"), std::string::npos);
}

TEST(Render, UnknownColumn) {
  ReportSpec spec;
  spec.columns = {"avg_story_len", "bogus"};
  EXPECT_THROW(Render(testing::LoadLexicalScores(), spec), ConfigError);
}

TEST(Render, MarkdownTableShape) {
  const auto report = Render(testing::LoadLexicalScores(), {});
  std::istringstream in(report.markdown);
  std::string line;
  size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    // Unescaped pipes delimit exactly 17 cells.
    size_t pipes = 0;
    for (size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '|' && (i == 0 || line[i - 1] != '\\')) ++pipes;
    }
    EXPECT_EQ(pipes, 18u) << line;
  }
  EXPECT_EQ(lines, 16u);
}

TEST(Render, HighlightsMatchBruteForce) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> value(0, 6);  // small range forces ties
  std::bernoulli_distribution missing(0.2), lower(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t m = 1 + rng() % 5, k = 1 + rng() % 6;
    std::vector<MetricInfo> metrics;
    for (size_t j = 0; j < m; ++j) {
      metrics.push_back({"c" + std::to_string(j),
                         lower(rng) ? Direction::kLowerBetter
                                    : Direction::kHigherBetter});
    }
    std::vector<ScoreRow> rows;
    for (size_t i = 0; i <= k; ++i) {
      ScoreRow row{i == 0 ? "H" : "m" + std::to_string(i), {}};
      for (size_t j = 0; j < m; ++j) {
        if (i > 0 && missing(rng)) {
          row.values.push_back(std::nullopt);
        } else {
          row.values.push_back(value(rng));
        }
      }
      rows.push_back(std::move(row));
    }
    const ScoreMatrix matrix(metrics, rows, "H");
    for (size_t j = 0; j < m; ++j) {
      const auto h = ComputeHighlight(matrix, j);
      std::set<double> distinct;
      for (const auto& r : rows) {
        if (r.values[j]) distinct.insert(*r.values[j]);
      }
      std::vector<double> order(distinct.begin(), distinct.end());
      if (metrics[j].direction == Direction::kHigherBetter) {
        std::reverse(order.begin(), order.end());
      }
      std::vector<std::string> best, second;
      for (const auto& r : rows) {
        if (!r.values[j]) continue;
        if (*r.values[j] == order[0]) best.push_back(r.model);
        if (order.size() > 1 && *r.values[j] == order[1]) second.push_back(r.model);
      }
      auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
      };
      EXPECT_EQ(sorted(h.best), sorted(best));
      EXPECT_EQ(sorted(h.second), sorted(second));

      // Closest to human by exhaustive search over machine rows.
      double gap = 1e300;
      std::vector<std::string> tied;
      for (size_t i = 1; i < rows.size(); ++i) {
        if (!rows[i].values[j]) continue;
        const double g = std::fabs(*rows[i].values[j] - *rows[0].values[j]);
        if (g < gap) {
          gap = g;
          tied = {rows[i].model};
        } else if (g == gap) {
          tied.push_back(rows[i].model);
        }
      }
      if (tied.empty()) {
        EXPECT_FALSE(h.closest);
      } else {
        ASSERT_TRUE(h.closest);
        EXPECT_EQ(h.closest->gap, gap);
        EXPECT_EQ(h.closest->tied, sorted(tied));
        EXPECT_EQ(h.closest->model, sorted(tied).front());
      }
    }
  }
}

TEST(Render, JsonRoundTripIsBitExact) {
  const auto matrix = testing::LoadLexicalScores();
  const auto report = Render(matrix, {});
  std::istringstream in(report.json);
  const auto back = ParseScoreMatrixJson(in, "r.json", "Humans");
  for (size_t r = 0; r < matrix.rows().size(); ++r) {
    EXPECT_EQ(back.rows()[r].values, matrix.rows()[r].values);
  }
  const auto doc = json::parse(report.json);
  EXPECT_EQ(doc["highlights"].size(), 16u);
}

TEST(Render, FixedDigits) {
  ReportSpec spec;
  spec.columns = {"ttr"};
  spec.digits = 3;
  const auto report = Render(testing::LoadLexicalScores(), spec);
  EXPECT_NE(report.csv.find("Humans,5.690\n"), std::string::npos);
  EXPECT_NE(report.csv.find("Ca-VIST,\n"), std::string::npos);
}

McRun MakeRun(size_t index, std::vector<ModelScore> scores) {
  McRun run;
  run.run_index = index;
  run.kind = NormKind::kL2;
  run.seed = 42;
  run.scores = std::move(scores);
  return run;
}

TEST(EmitMcDistribution, ShapeAndSummaries) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> score(16.0, 32.0);
  std::vector<McRun> runs;
  for (size_t i = 0; i < 1000; ++i) {
    std::vector<ModelScore> scores;
    for (int m = 0; m < 7; ++m) scores.push_back({"m" + std::to_string(m), score(rng)});
    runs.push_back(MakeRun(i, scores));
  }
  const auto out = EmitMcDistribution(runs);
  EXPECT_EQ(std::count(out.csv.begin(), out.csv.end(), '\n'), 7001);
  const auto summary = json::parse(out.summary_json);
  EXPECT_EQ(summary["runs"], 1000);
  EXPECT_EQ(summary["norm"], "l2");
  ASSERT_EQ(summary["models"].size(), 7u);

  // Recompute each summary from the CSV itself.
  std::istringstream in(out.csv);
  std::string line;
  std::getline(in, line);
  std::map<std::string, std::vector<double>> samples;
  while (std::getline(in, line)) {
    const auto a = line.find(','), b = line.rfind(',');
    double v = 0;
    ASSERT_TRUE(ParseFiniteDouble(line.substr(b + 1), &v));
    samples[line.substr(a + 1, b - a - 1)].push_back(v);
  }
  for (const auto& entry : summary["models"]) {
    auto values = samples.at(entry["model"].get<std::string>());
    std::sort(values.begin(), values.end());
    ASSERT_EQ(values.size(), 1000u);
    // Type-7 quantile: h = (n-1)q.
    auto q = [&](double p) {
      const double h = (values.size() - 1) * p;
      const size_t lo = static_cast<size_t>(h);
      const double frac = h - lo;
      return lo + 1 < values.size() ? values[lo] + frac * (values[lo + 1] - values[lo])
                                     : values[lo];
    };
    EXPECT_EQ(entry["min"].get<double>(), values.front());
    EXPECT_EQ(entry["max"].get<double>(), values.back());
    EXPECT_NEAR(entry["q1"].get<double>(), q(0.25), 1e-12);
    EXPECT_NEAR(entry["median"].get<double>(), q(0.5), 1e-12);
    EXPECT_NEAR(entry["q3"].get<double>(), q(0.75), 1e-12);
    long double sum = 0;
    for (double v : values) sum += v;
    EXPECT_NEAR(entry["mean"].get<double>(), static_cast<double>(sum / 1000), 1e-12);
  }
}

TEST(EmitMcDistribution, ConstantScoresHaveZeroIqr) {
  std::vector<McRun> runs;
  for (size_t i = 0; i < 50; ++i) runs.push_back(MakeRun(i, {{"m", 24.5}}));
  const auto summary = json::parse(EmitMcDistribution(runs).summary_json);
  EXPECT_EQ(summary["models"][0]["iqr"].get<double>(), 0.0);
  EXPECT_EQ(summary["models"][0]["median"].get<double>(), 24.5);
}

TEST(RenderRankTable, Formats) {
  RankTable table;
  table.groups[kAllEvaluators]["OL"]["a"] = {1.5, 2, 3};
  table.groups[kAllEvaluators]["OL"]["b"] = {2.5, 2, 5};
  table.groups[kAllEvaluators]["OL"]["c"] = {2.0, 2, 4};
  const auto md = RenderRankTable(table, OutputFormat::kMarkdown);
  EXPECT_NE(md.find("| a | **1.50** |"), std::string::npos) << md;
  EXPECT_NE(md.find("| c | _2.00_ |"), std::string::npos) << md;
  EXPECT_NE(md.find("| b | 2.50 |"), std::string::npos) << md;
  const auto csv = RenderRankTable(table, OutputFormat::kCsv);
  EXPECT_NE(csv.find("all,OL,a,1.5,2\n"), std::string::npos);
  const auto doc = json::parse(RenderRankTable(table, OutputFormat::kJson));
  EXPECT_EQ(doc["all"]["OL"]["b"]["mean_rank"], 2.5);
}

TEST(LexicalRows, TaggerSubstitutionOnlyMovesPosColumns) {
  Story story;
  story.story_id = "1";
  story.model = "M";
  story.sentences = {"She saw a big red dog.", "It ran home quickly."};
  story.raw_text = "She saw a big red dog. It ran home quickly.";
  const ModelCorpus corpus{"M", {story}};
  const std::vector<CorpusLexStats> stats{ComputeCorpusStats(corpus)};

  class AllNouns : public Tagger {
   public:
    std::vector<PosTag> Tag(std::span<const std::string> tokens) const override {
      return std::vector<PosTag>(tokens.size(), PosTag::kNoun);
    }
  };
  const std::vector<PosProfile> lexicon{ComputePosProfile(corpus, LexiconTagger())};
  const std::vector<PosProfile> stub{ComputePosProfile(corpus, AllNouns())};
  const auto a = LexicalRows(stats, lexicon);
  const auto b = LexicalRows(stats, stub);
  const auto& names = LexicalMetricNames();
  for (size_t j = 0; j < names.size(); ++j) {
    if (names[j].rfind("pct_", 0) == 0) continue;
    EXPECT_EQ(a[0].values[j], b[0].values[j]) << names[j];
  }
  EXPECT_EQ(*b[0].values[5], 100.0);
  EXPECT_NE(a[0].values[5], b[0].values[5]);
}

}  // namespace
}  // namespace storyeval
