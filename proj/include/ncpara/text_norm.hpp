// Copyright 2026 The ncpara Authors
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

#ifndef NCPARA_TEXT_NORM_HPP
#define NCPARA_TEXT_NORM_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ncpara {

/// A paraphrase after normalization: lowercase tokens, no surrounding
/// punctuation, never empty strings.
using TokenSeq = std::vector<std::string>;

using DeterminerSet = std::set<std::string>;

/// {a, an, the}. Matching is insensitive to these words unless the caller
/// configures a different set.
const DeterminerSet& default_determiners();

/// Splits on whitespace, case-folds (ASCII plus Latin-1 letters), and strips
/// leading/trailing . , ; : ! ? " ' ( ) from each token. Internal hyphens and
/// apostrophes are kept, so "ice-cream" survives as one token. Tokens that
/// become empty are dropped. Throws std::invalid_argument if nothing survives.
TokenSeq tokenize(const std::string& raw);

/// Same as tokenize() but returns an empty sequence instead of throwing.
TokenSeq tokenize_lenient(const std::string& raw);

/// Joins tokens with single spaces; the canonical surface form used for
/// duplicate merging and file output.
std::string join_tokens(const TokenSeq& tokens);

/// Removes every token found in `determiners`, preserving the order of the
/// survivors. The result may be empty.
TokenSeq strip_determiners(TokenSeq seq, const DeterminerSet& determiners);

/// Accepted singular/plural surface forms of a noun: the noun itself, +"s",
/// +"es", and the y->ies form after a consonant. Over-generates on purpose
/// ("filteres"); used only to locate compound constituents, never to score.
std::set<std::string> inflection_variants(const std::string& noun);

/// Number of UTF-8 code points in `word`.
std::size_t utf8_length(std::string_view word);

/// Length, in code points, of the longest common prefix of two words.
std::size_t common_prefix_length(std::string_view a, std::string_view b);

}  // namespace ncpara

#endif  // NCPARA_TEXT_NORM_HPP
