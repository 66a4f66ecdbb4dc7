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

// Coarse part-of-speech tagging for the noun/verb/pronoun/adjective
// percentage columns. The default tagger is a closed lexicon plus suffix
// rules; it has no context model, so ambiguous words always get their
// lexicon tag.

#ifndef STORYEVAL_POSTAG_H_
#define STORYEVAL_POSTAG_H_

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "storyeval/corpus.h"

namespace storyeval {

enum class PosTag { kNoun, kVerb, kPron, kAdj, kOther };

std::string_view PosTagName(PosTag tag);     // "NOUN", "VERB", ...
PosTag ParsePosTag(std::string_view name);   // throws ConfigError

class Tagger {
 public:
  virtual ~Tagger() = default;
  // Exactly one tag per token.
  virtual std::vector<PosTag> Tag(std::span<const std::string> tokens) const = 0;
};

class LexiconTagger : public Tagger {
 public:
  // Starts from the embedded English lexicon.
  LexiconTagger();

  // Embedded lexicon with the entries of a word<TAB>tag file layered on
  // top. Blank lines and lines starting with '#' are ignored.
  static LexiconTagger WithOverrides(const std::filesystem::path& path);
  void LoadOverrides(std::istream& in, const std::string& source);

  void SetEntry(std::string word, PosTag tag);

  std::vector<PosTag> Tag(std::span<const std::string> tokens) const override;
  PosTag TagWord(std::string_view word) const;

 private:
  const PosTag* Lookup(std::string_view word) const;

  std::unordered_map<std::string, PosTag> lexicon_;
};

// Percentages of all tokens of all stories of a model.
struct PosProfile {
  double pct_noun = 0.0;
  double pct_verb = 0.0;
  double pct_pron = 0.0;
  double pct_adj = 0.0;
};

PosProfile ComputePosProfile(const ModelCorpus& corpus, const Tagger& tagger);

}  // namespace storyeval

#endif  // STORYEVAL_POSTAG_H_
