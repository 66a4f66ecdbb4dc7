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

#include "storyeval/textstats.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "storyeval/csv.h"
#include "storyeval/numeric.h"

namespace storyeval {
namespace {

bool IsAsciiAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Classifies the character at `i`. Sets `width` to its byte length.
enum class CharClass { kWord, kApostrophe, kSpace, kOther };

CharClass Classify(std::string_view text, size_t i, size_t* width) {
  const auto c = static_cast<unsigned char>(text[i]);
  *width = 1;
  if (c < 0x80) {
    if (IsAsciiAlnum(c)) return CharClass::kWord;
    if (c == '\'') return CharClass::kApostrophe;
    if (IsSpace(c)) return CharClass::kSpace;
    return CharClass::kOther;
  }
  // U+00A0 no-break space.
  if (c == 0xC2 && i + 1 < text.size() &&
      static_cast<unsigned char>(text[i + 1]) == 0xA0) {
    *width = 2;
    return CharClass::kSpace;
  }
  // U+2000..U+203F general punctuation; U+2019 doubles as an apostrophe.
  if (c == 0xE2 && i + 2 < text.size() &&
      static_cast<unsigned char>(text[i + 1]) == 0x80) {
    *width = 3;
    const auto third = static_cast<unsigned char>(text[i + 2]);
    if (third == 0x99) return CharClass::kApostrophe;
    if (third <= 0x8A) return CharClass::kSpace;
    return CharClass::kOther;
  }
  return CharClass::kWord;
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsCloser(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']';
}

}  // namespace

TokenSequence Tokenize(std::string_view text) {
  TokenSequence tokens;
  std::string current;
  size_t i = 0;
  while (i < text.size()) {
    size_t width = 1;
    const CharClass cls = Classify(text, i, &width);
    if (cls == CharClass::kWord) {
      for (size_t k = 0; k < width; ++k) {
        const auto c = static_cast<unsigned char>(text[i + k]);
        current.push_back(c < 0x80 ? static_cast<char>(std::tolower(c))
                                   : static_cast<char>(c));
      }
      i += width;
      continue;
    }
    if (cls == CharClass::kApostrophe && !current.empty() &&
        i + width < text.size()) {
      size_t next_width = 1;
      if (Classify(text, i + width, &next_width) == CharClass::kWord) {
        current.push_back('\'');
        i += width;
        continue;
      }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
    i += width;
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> sentences;
  auto emit = [&](std::string_view piece) {
    piece = Trim(piece);
    if (!piece.empty()) sentences.emplace_back(piece);
  };
  size_t start = 0;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    size_t end = i;
    while (end < text.size() && IsTerminator(text[end])) ++end;
    while (end < text.size() && IsCloser(text[end])) ++end;
    if (end == text.size() || IsSpace(static_cast<unsigned char>(text[end]))) {
      emit(text.substr(start, end - start));
      start = end;
    }
    i = end;
  }
  emit(text.substr(start));
  return sentences;
}

TokenSequence TokenizeStory(const Story& story) {
  TokenSequence tokens;
  for (const auto& sentence : story.sentences) {
    auto part = Tokenize(sentence);
    tokens.insert(tokens.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return tokens;
}

std::optional<double> RepN(std::span<const std::string> tokens, int n) {
  if (n < 1 || n > kMaxNgram) return std::nullopt;
  const size_t order = static_cast<size_t>(n);
  if (tokens.size() < order) return std::nullopt;

  std::unordered_map<std::string_view, uint32_t> ids;
  std::vector<uint32_t> seq;
  seq.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, inserted] =
        ids.emplace(t, static_cast<uint32_t>(ids.size()));
    seq.push_back(it->second);
  }

  const size_t total = seq.size() - order + 1;
  std::vector<std::array<uint32_t, kMaxNgram>> grams(total);
  for (size_t i = 0; i < total; ++i) {
    grams[i].fill(0);
    std::copy_n(seq.begin() + static_cast<std::ptrdiff_t>(i), order,
                grams[i].begin());
  }
  std::sort(grams.begin(), grams.end());
  const size_t unique = static_cast<size_t>(
      std::unique(grams.begin(), grams.end()) - grams.begin());
  return 100.0 * (1.0 - static_cast<double>(unique) /
                            static_cast<double>(total));
}

double TtrPct(double vocab, double tokens) { return 100.0 * vocab / tokens; }

double Diversity(double rep2, double rep3, double rep4) {
  return 100.0 * (1.0 - rep2 / 100.0) * (1.0 - rep3 / 100.0) *
         (1.0 - rep4 / 100.0);
}

StoryTokenStats ComputeTokenStats(std::span<const std::string> tokens,
                                  size_t sentence_count) {
  StoryTokenStats stats;
  stats.length = tokens.size();
  for (const auto& t : tokens) ++stats.freq[t];
  stats.unique_count = stats.freq.size();
  for (int n = 1; n <= kMaxNgram; ++n) stats.rep[n - 1] = RepN(tokens, n);
  stats.sentence_count = sentence_count;
  stats.words_per_sentence =
      sentence_count == 0 ? 0.0
                          : static_cast<double>(stats.length) /
                                static_cast<double>(sentence_count);
  return stats;
}

StoryTokenStats ComputeStoryStats(const Story& story) {
  const auto tokens = TokenizeStory(story);
  return ComputeTokenStats(tokens, story.sentences.size());
}

std::optional<double> YulesK(const StoryTokenStats& stats) {
  if (stats.length == 0) return std::nullopt;
  uint64_t sum_sq = 0;
  for (const auto& [word, f] : stats.freq) sum_sq += uint64_t{f} * f;
  const double length = static_cast<double>(stats.length);
  return 1e4 * static_cast<double>(sum_sq - stats.length) / (length * length);
}

std::optional<double> ShannonEntropy(const StoryTokenStats& stats) {
  if (stats.length == 0) return std::nullopt;
  const double length = static_cast<double>(stats.length);
  CompensatedSum h;
  for (const auto& [word, f] : stats.freq) {
    const double p = static_cast<double>(f) / length;
    h.Add(-p * std::log2(p));
  }
  // A single repeated word gives -1*log2(1) = -0.0.
  return h.value() + 0.0;
}

CorpusLexStats ComputeCorpusStats(const ModelCorpus& corpus) {
  CorpusLexStats out;
  out.model = corpus.model;
  out.n = corpus.n();
  if (out.n == 0) return out;

  std::unordered_set<std::string> vocabulary;
  CompensatedSum story_len, sent_len, yules, entropy;
  std::array<CompensatedSum, kMaxNgram> rep_sum;
  std::array<size_t, kMaxNgram> rep_count{};
  size_t scored = 0;

  for (const auto& story : corpus.stories) {
    const auto tokens = TokenizeStory(story);
    const auto stats = ComputeTokenStats(tokens, story.sentences.size());
    vocabulary.insert(tokens.begin(), tokens.end());
    out.token_count += stats.length;
    story_len.Add(static_cast<double>(stats.length));
    sent_len.Add(stats.words_per_sentence);
    for (int n = 0; n < kMaxNgram; ++n) {
      if (stats.rep[n]) {
        rep_sum[n].Add(*stats.rep[n]);
        ++rep_count[n];
      }
    }
    if (auto k = YulesK(stats)) {
      yules.Add(*k);
      entropy.Add(*ShannonEntropy(stats));
      ++scored;
    }
  }

  const double n = static_cast<double>(out.n);
  out.vocab_size = vocabulary.size();
  out.avg_story_len = story_len.value() / n;
  out.avg_sent_len = sent_len.value() / n;
  out.vocab_per_n = static_cast<double>(out.vocab_size) / n;
  out.tokens_per_n = static_cast<double>(out.token_count) / n;
  if (out.token_count > 0) {
    out.ttr_pct = TtrPct(static_cast<double>(out.vocab_size),
                         static_cast<double>(out.token_count));
  }
  for (int i = 0; i < kMaxNgram; ++i) {
    if (rep_count[i] > 0) {
      out.rep[i] = rep_sum[i].value() / static_cast<double>(rep_count[i]);
    }
  }
  if (out.rep[1] && out.rep[2] && out.rep[3]) {
    out.diversity_pct = Diversity(*out.rep[1], *out.rep[2], *out.rep[3]);
  }
  if (scored > 0) {
    out.yules_k_avg = yules.value() / static_cast<double>(scored);
    out.entropy_avg = entropy.value() / static_cast<double>(scored);
  }
  return out;
}

}  // namespace storyeval
