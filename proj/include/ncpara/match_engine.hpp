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
//
// Fuzzy n-gram overlap between two short paraphrases.
//
// Two words match with score 1.0 when identical, or with a partial score of
// (2|P| / (|a| + |b|))^2 when they share a common prefix P of three or more
// characters: word_match("cutting", "cuts") = (6/11)^2 = 0.297. Two n-grams
// match when every aligned word pair matches with a nonzero score; the n-gram
// score is the sum of those word scores. The overlap of a test paraphrase
// against a gold paraphrase sums, over every contiguous n-gram of the test
// side (n = 1 .. |test|), the best achievable match against any same-length
// gold n-gram. Dividing by the larger of the two self-overlaps maps the score
// into [0, 1]; only an exact reproduction reaches 1.0, and every extra or
// missing word costs something.
//
// Paraphrases here are a handful of tokens, so the exhaustive search over all
// n-gram pairs is the intended implementation, not a placeholder for an
// indexed one.

#ifndef NCPARA_MATCH_ENGINE_HPP
#define NCPARA_MATCH_ENGINE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ncpara/text_norm.hpp"

namespace ncpara {

/// Word-level fuzzy match in [0, 1]. 1.0 iff the words are identical; 0.0
/// when the common prefix is shorter than three code points. Symmetric.
double word_match(std::string_view gold_word, std::string_view test_word);

/// Score for aligning two same-length n-grams: the sum of positionwise
/// word_match values, or nullopt if any position scores 0. Throws
/// std::invalid_argument on length mismatch.
std::optional<double> ngram_match(std::span<const std::string> gold,
                                  std::span<const std::string> test);

/// Sum over all contiguous n-grams of `test` of the best ngram_match against
/// any same-length contiguous n-gram of `gold`; unmatched n-grams add 0.
/// Ties between gold n-grams keep the leftmost. Throws if `test` is empty.
double overlap_score(const TokenSeq& test, const TokenSeq& gold);

/// overlap_score(seq, seq): the normalization ceiling. For a sequence of L
/// tokens this is L(L+1)(L+2)/6. Throws if `seq` is empty.
double self_score(const TokenSeq& seq);

/// overlap_score(test, gold) / max(self_score(test), self_score(gold)),
/// in [0, 1]. Both sequences must be non-empty and determiner-stripped.
///
/// The (test, gold) direction is authoritative: the enumeration runs over
/// test n-grams, several of which may take the same gold n-gram. The two
/// directions disagree whenever that happens, e.g. through repeated tokens
/// ([x, x] vs [x] scores 0.5, the reverse 0.25) or through prefix-sharing
/// words ([filter, filters] vs [filter]).
double normalized_overlap(const TokenSeq& test, const TokenSeq& gold);

}  // namespace ncpara

#endif  // NCPARA_MATCH_ENGINE_HPP
