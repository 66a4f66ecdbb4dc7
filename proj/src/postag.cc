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

#include "storyeval/postag.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "pos_lexicon.h"
#include "storyeval/csv.h"
#include "storyeval/errors.h"
#include "storyeval/textstats.h"

namespace storyeval {
namespace {

bool EndsWith(std::string_view word, std::string_view suffix) {
  return word.size() > suffix.size() && word.ends_with(suffix);
}

// Stem must keep at least this many characters for a suffix rule to fire.
constexpr size_t kMinStem = 3;

bool HasSuffix(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() + kMinStem && word.ends_with(suffix);
}

constexpr std::array<std::string_view, 9> kAdjectiveSuffixes = {
    "ous", "ful", "ive", "able", "ible", "less", "ish", "iest", "ical"};

}  // namespace

std::string_view PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kVerb: return "VERB";
    case PosTag::kPron: return "PRON";
    case PosTag::kAdj: return "ADJ";
    case PosTag::kOther: return "OTHER";
  }
  return "OTHER";
}

PosTag ParsePosTag(std::string_view name) {
  for (PosTag t : {PosTag::kNoun, PosTag::kVerb, PosTag::kPron, PosTag::kAdj,
                   PosTag::kOther}) {
    if (PosTagName(t) == name) return t;
  }
  throw ConfigError("unknown POS tag '" + std::string(name) + "'");
}

LexiconTagger::LexiconTagger() {
  std::istringstream in{std::string(internal::EmbeddedPosLexicon())};
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const PosTag tag = ParsePosTag(Trim(std::string_view(line).substr(0, colon)));
    std::istringstream words(line.substr(colon + 1));
    std::string word;
    while (words >> word) lexicon_[word] = tag;
  }
}

LexiconTagger LexiconTagger::WithOverrides(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open tagger lexicon " + path.string());
  LexiconTagger tagger;
  tagger.LoadOverrides(in, path.string());
  return tagger;
}

void LexiconTagger::LoadOverrides(std::istream& in, const std::string& source) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto tab = trimmed.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(source, line_no, "expected word<TAB>tag");
    }
    const auto word = Trim(trimmed.substr(0, tab));
    const auto tag = Trim(trimmed.substr(tab + 1));
    if (word.empty()) throw ParseError(source, line_no, "empty word");
    PosTag parsed;
    try {
      parsed = ParsePosTag(tag);
    } catch (const ConfigError& e) {
      throw ParseError(source, line_no, e.what());
    }
    auto tokens = Tokenize(word);
    SetEntry(tokens.size() == 1 ? tokens.front() : std::string(word), parsed);
  }
}

void LexiconTagger::SetEntry(std::string word, PosTag tag) {
  lexicon_[std::move(word)] = tag;
}

const PosTag* LexiconTagger::Lookup(std::string_view word) const {
  auto it = lexicon_.find(std::string(word));
  return it == lexicon_.end() ? nullptr : &it->second;
}

std::vector<PosTag> LexiconTagger::Tag(
    std::span<const std::string> tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const auto& t : tokens) tags.push_back(TagWord(t));
  return tags;
}

PosTag LexiconTagger::TagWord(std::string_view word) const {
  if (word.empty()) return PosTag::kOther;
  if (std::any_of(word.begin(), word.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return PosTag::kOther;
  }
  if (const PosTag* tag = Lookup(word)) return *tag;

  // Clitics: "n't" negates an auxiliary, "'s" marks a possessive noun.
  if (EndsWith(word, "n't")) return PosTag::kOther;
  if (const auto apos = word.find('\''); apos != std::string_view::npos) {
    const PosTag* stem = Lookup(word.substr(0, apos));
    if (stem && *stem == PosTag::kPron) return PosTag::kPron;
    return word.ends_with("'s") ? PosTag::kNoun : PosTag::kOther;
  }

  // Plurals and third-person singular take the stem's tag.
  if (EndsWith(word, "ies")) {
    std::string stem(word.substr(0, word.size() - 3));
    stem.push_back('y');
    if (const PosTag* tag = Lookup(stem)) {
      return *tag == PosTag::kVerb ? PosTag::kVerb : PosTag::kNoun;
    }
  }
  if (EndsWith(word, "s") && !word.ends_with("ss") && !word.ends_with("us") &&
      !word.ends_with("is")) {
    for (size_t cut : {size_t{1}, size_t{2}}) {
      if (cut == 2 && !word.ends_with("es")) continue;
      if (const PosTag* tag = Lookup(word.substr(0, word.size() - cut))) {
        return *tag == PosTag::kVerb ? PosTag::kVerb : PosTag::kNoun;
      }
    }
  }

  // Comparatives and superlatives of known adjectives.
  for (std::string_view suffix : {"er", "est"}) {
    if (!EndsWith(word, suffix)) continue;
    const auto stem = word.substr(0, word.size() - suffix.size());
    const PosTag* tag = Lookup(stem);
    if (!tag && stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
      tag = Lookup(stem.substr(0, stem.size() - 1));
    }
    if (!tag) tag = Lookup(std::string(stem) + "e");
    if (tag && *tag == PosTag::kAdj) return PosTag::kAdj;
  }

  if (HasSuffix(word, "ed") || HasSuffix(word, "ing")) return PosTag::kVerb;
  if (HasSuffix(word, "ly")) return PosTag::kOther;
  for (std::string_view suffix : kAdjectiveSuffixes) {
    if (HasSuffix(word, suffix)) return PosTag::kAdj;
  }
  return PosTag::kNoun;
}

PosProfile ComputePosProfile(const ModelCorpus& corpus, const Tagger& tagger) {
  std::array<size_t, 5> counts{};
  size_t total = 0;
  for (const auto& story : corpus.stories) {
    const auto tokens = TokenizeStory(story);
    for (PosTag tag : tagger.Tag(tokens)) {
      ++counts[static_cast<size_t>(tag)];
      ++total;
    }
  }
  PosProfile profile;
  if (total == 0) return profile;
  auto pct = [&](PosTag t) {
    return 100.0 * static_cast<double>(counts[static_cast<size_t>(t)]) /
           static_cast<double>(total);
  };
  profile.pct_noun = pct(PosTag::kNoun);
  profile.pct_verb = pct(PosTag::kVerb);
  profile.pct_pron = pct(PosTag::kPron);
  profile.pct_adj = pct(PosTag::kAdj);
  return profile;
}

}  // namespace storyeval
