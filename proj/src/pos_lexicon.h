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

#ifndef STORYEVAL_SRC_POS_LEXICON_H_
#define STORYEVAL_SRC_POS_LEXICON_H_

#include <string_view>

namespace storyeval::internal {

// Lines of the form "TAG: word word ...".
std::string_view EmbeddedPosLexicon();

}  // namespace storyeval::internal

#endif  // STORYEVAL_SRC_POS_LEXICON_H_
