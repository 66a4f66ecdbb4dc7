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

// Tokenization, sentence splitting, and the lexical statistics reported per
// model: lengths, vocabulary/token ratios, n-gram repetition, diversity,
// Yule's K and Shannon entropy.

#ifndef STORYEVAL_TEXTSTATS_H_
#define STORYEVAL_TEXTSTATS_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "storyeval/corpus.h"

namespace storyeval {

// Lowercase word tokens, none empty, none containing whitespace.
using TokenSequence = std::vector<std::string>;

inline constexpr int kMaxNgram = 4;

// Tokens are maximal runs of letters/digits (non-ASCII bytes count as
// letters). An apostrophe (' or U+2019) between two word characters stays
// inside the token as '; all other punctuation separates tokens and is
// dropped. ASCII letters are lowercased.
TokenSequence Tokenize(std::string_view text);

// Splits after each run of '.', '!' or '?' (plus any closing quotes or
// brackets) that is followed by whitespace or the end of text. Terminators
// stay with their sentence; pieces are trimmed and empty ones dropped.
std::vector<std::string> SplitSentences(std::string_view text);

// All tokens of a story, sentence by sentence.
TokenSequence TokenizeStory(const Story& story);

// 100 * (1 - |unique n-grams| / |n-grams|) over overlapping n-grams.
// std::nullopt when the sequence has fewer than n tokens.
std::optional<double> RepN(std::span<const std::string> tokens, int n);

// 100 * prod_{n=2..4} (1 - rep_n / 100), inputs and result in percent.
// Percent scale. Per-story averages (|V|/n, N_tok/n) give the same ratio as
// the raw counts.
double TtrPct(double vocab, double tokens);

double Diversity(double rep2, double rep3, double rep4);

struct StoryTokenStats {
  size_t length = 0;                   // L
  std::map<std::string, size_t> freq;  // f_i, ordered for stable summation
  size_t unique_count = 0;
  std::array<std::optional<double>, kMaxNgram> rep;  // rep_1..rep_4
  size_t sentence_count = 0;
  double words_per_sentence = 0.0;
};

StoryTokenStats ComputeTokenStats(std::span<const std::string> tokens,
                                  size_t sentence_count);
StoryTokenStats ComputeStoryStats(const Story& story);

// 1e4 * (sum f_i^2 - L) / L^2; std::nullopt when L == 0.
std::optional<double> YulesK(const StoryTokenStats& stats);

// -sum p_i log2 p_i in bits; std::nullopt when L == 0.
std::optional<double> ShannonEntropy(const StoryTokenStats& stats);

struct CorpusLexStats {
  std::string model;
  size_t n = 0;
  size_t vocab_size = 0;   // |V|, union over all stories of the model
  size_t token_count = 0;  // N_tok
  double avg_story_len = 0.0;
  double avg_sent_len = 0.0;
  double vocab_per_n = 0.0;
  double tokens_per_n = 0.0;
  std::optional<double> ttr_pct;  // 100 * |V| / N_tok
  // Per-story rep_n averaged over the stories long enough for n.
  std::array<std::optional<double>, kMaxNgram> rep;
  // From the averaged rep_2..rep_4.
  std::optional<double> diversity_pct;
  std::optional<double> yules_k_avg;
  std::optional<double> entropy_avg;
};

CorpusLexStats ComputeCorpusStats(const ModelCorpus& corpus);

}  // namespace storyeval

#endif  // STORYEVAL_TEXTSTATS_H_
