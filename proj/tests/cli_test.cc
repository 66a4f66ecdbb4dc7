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

#include <sstream>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "storyeval/corpus.h"
#include "test_util.h"

namespace storyeval {
namespace {

using json = nlohmann::json;

int Invoke(const std::vector<std::string>& args, std::string* out = nullptr,
           std::string* err = nullptr) {
  std::vector<const char*> argv = {"storyeval"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = Main(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

std::string ScoresPath() { return testing::TestData("lexical_scores.csv").string(); }

TEST(Cli, StatsWritesOneRowPerModel) {
  testing::TempDir dir;
  const auto out = (dir / "lex.csv").string();
  ASSERT_EQ(Invoke({"stats", "--input", testing::TestData("stories.jsonl").string(),
                    "--out", out}),
            kExitOk);
  const auto text = testing::ReadFile(out);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
  EXPECT_EQ(text.rfind("model,avg_story_len,", 0), 0u);

  // The CSV feeds straight back into ideality.
  std::string result;
  ASSERT_EQ(Invoke({"ideality", "--scores", out, "--human-row", "Humans",
                    "--normalize", "--format", "json"},
                   &result),
            kExitOk);
  const auto doc = json::parse(result);
  ASSERT_EQ(doc.size(), 2u);
  for (const auto& entry : doc) {
    EXPECT_GT(entry["normalized"].get<double>(), 1.0);
    EXPECT_LE(entry["normalized"].get<double>(), 2.0);
  }
}

TEST(Cli, StatsJsonAndMarkdown) {
  std::string out;
  ASSERT_EQ(Invoke({"stats", "--input", testing::TestData("stories.jsonl").string(),
                    "--format", "json"},
                   &out),
            kExitOk);
  EXPECT_NO_THROW(json::parse(out));
  ASSERT_EQ(Invoke({"stats", "--input", testing::TestData("stories.jsonl").string(),
                    "--format", "md", "--digits", "2"},
                   &out),
            kExitOk);
  EXPECT_NE(out.find("| Humans |"), std::string::npos);
  EXPECT_NE(out.find("[ch]"), std::string::npos);
}

TEST(Cli, NormalizedIdealityRanksTransfBartFirst) {
  std::string out;
  ASSERT_EQ(Invoke({"ideality", "--scores", ScoresPath(), "--human-row", "Humans",
                    "--normalize", "--format", "csv"},
                   &out),
            kExitOk);
  std::istringstream in(out);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, "rank,model,raw,evaluated_metrics,normalized");
  EXPECT_EQ(first.rfind("1,Transf.+BART,", 0), 0u) << first;
}

TEST(Cli, WeightedIdealityIsDeterministic) {
  testing::TempDir dir;
  for (const char* name : {"a.csv", "b.csv"}) {
    ASSERT_EQ(Invoke({"weighted-ideality", "--scores", ScoresPath(), "--human-row",
                      "Humans", "--runs", "200", "--norm", "l2", "--seed", "42",
                      "--out", (dir / name).string()}),
              kExitOk);
  }
  const auto a = testing::ReadFile(dir / "a.csv");
  EXPECT_EQ(a, testing::ReadFile(dir / "b.csv"));
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 1 + 200 * 13);
  EXPECT_EQ(testing::ReadFile(dir / "a.csv.summary.json"),
            testing::ReadFile(dir / "b.csv.summary.json"));

  ASSERT_EQ(Invoke({"weighted-ideality", "--scores", ScoresPath(), "--human-row",
                    "Humans", "--runs", "10", "--seed", "7", "--complete-only",
                    "--out", (dir / "c.csv").string()}),
            kExitOk);
  const auto c = testing::ReadFile(dir / "c.csv");
  EXPECT_EQ(c.find("Ca-VIST"), std::string::npos);
  EXPECT_NE(c.find("Transf.+BART"), std::string::npos);
}

TEST(Cli, RanksSubcommand) {
  std::string out;
  ASSERT_EQ(Invoke({"ranks", "--input", testing::TestData("rankings.csv").string(),
                    "--format", "csv"},
                   &out),
            kExitOk);
  EXPECT_NE(out.find("all,OL,ModelA,2,3\n"), std::string::npos) << out;
  ASSERT_EQ(Invoke({"ranks", "--input", testing::TestData("rankings.csv").string(),
                    "--split-by", "evaluator_source", "--format", "csv"},
                   &out),
            kExitOk);
  EXPECT_NE(out.find("human,OL,ModelA,1.5,2\n"), std::string::npos) << out;
  EXPECT_NE(out.find("gpt-4o,OL,ModelC,1,1\n"), std::string::npos) << out;
}

TEST(Cli, ReportSubcommand) {
  testing::TempDir dir;
  std::string out;
  ASSERT_EQ(Invoke({"report", "--scores", ScoresPath(), "--human-row", "Humans",
                    "--columns", "avg_story_len,ttr", "--out",
                    (dir / "t.csv").string(), "--highlights",
                    (dir / "h.json").string()}),
            kExitOk);
  const auto hl = json::parse(testing::ReadFile(dir / "h.json"));
  EXPECT_EQ(hl["columns"][0]["closest_to_human"]["model"], "Transf.+BART");
  EXPECT_EQ(testing::ReadFile(dir / "t.csv").rfind("model,avg_story_len,ttr\n", 0),
            0u);
}

TEST(Cli, ExitCodes) {
  std::string err;
  // Configuration problems.
  EXPECT_EQ(Invoke({"weighted-ideality", "--scores", ScoresPath(), "--human-row",
                    "Humans"},
                   nullptr, &err),
            kExitConfigError);
  EXPECT_NE(err.find("seed"), std::string::npos);
  EXPECT_EQ(Invoke({"ideality", "--scores", ScoresPath(), "--human-row", "Nobody"}),
            kExitConfigError);
  EXPECT_EQ(Invoke({"report", "--scores", ScoresPath(), "--columns", "bogus"}),
            kExitConfigError);
  EXPECT_EQ(Invoke({"bogus"}), kExitConfigError);
  EXPECT_EQ(Invoke({"ideality", "--scores", "/nonexistent.csv", "--human-row",
                    "Humans"}),
            kExitConfigError);

  // Data problems.
  testing::TempDir dir;
  testing::WriteText(dir / "bad.jsonl", "{\"story_id\": \"1\"}\n");
  EXPECT_EQ(Invoke({"stats", "--input", (dir / "bad.jsonl").string()}, nullptr,
                   &err),
            kExitDataError);
  EXPECT_NE(err.find(":1"), std::string::npos) << err;
  testing::WriteText(dir / "dup.csv",
                     "evaluator_id,item_id,criterion,model,rank\n"
                     "e,i,c,a,1\ne,i,c,b,1\n");
  EXPECT_EQ(Invoke({"ranks", "--input", (dir / "dup.csv").string()}),
            kExitDataError);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(testing::RunCli("ideality --scores " + ScoresPath() +
                            " --human-row Humans > /dev/null"),
            kExitOk);
  EXPECT_EQ(testing::RunCli("weighted-ideality --scores " + ScoresPath() +
                            " --human-row Humans 2> /dev/null"),
            kExitConfigError);
}

}  // namespace
}  // namespace storyeval
