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

#ifndef NCPARA_GOLD_PIPELINE_HPP
#define NCPARA_GOLD_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncpara/gold.hpp"
#include "ncpara/text_norm.hpp"

namespace ncpara {

enum class InvalidReason {
  kEmpty,
  kMissingHead,
  kMissingModifier,
  kWrongOrder,
  kNoLinkingPhrase,
};

/// "empty", "missing-head", "missing-modifier", "wrong-order",
/// "no-linking-phrase".
std::string_view to_string(InvalidReason reason);

struct ValidationVerdict {
  std::optional<InvalidReason> reason;  // absent iff valid

  bool valid() const { return !reason.has_value(); }
};

/// A well-formed paraphrase contains the head, then at least one linking
/// token, then the modifier. Constituents may appear in singular or plural
/// inflectional form (see inflection_variants) but not in a derivational
/// form, so "filtration of air" fails for "air filter". Extra tokens before
/// or after are fine.
ValidationVerdict validate_paraphrase(const Compound& compound,
                                      const TokenSeq& tokens);

/// Tokenizing overload; a paraphrase with no surviving tokens is "empty".
ValidationVerdict validate_paraphrase(const Compound& compound,
                                      const std::string& paraphrase);

struct CompileResult {
  std::vector<GoldList> gold;  // sorted by (modifier, head)
  std::vector<std::string> warnings;
};

/// Compiles raw annotations into ranked gold lists:
///   - ill-formed paraphrases are dropped with a warning;
///   - identical paraphrases (same tokenization, case-folded; determiners
///     retained) are merged, frequency = number of merged records;
///   - per compound, distinct frequencies sorted descending define the ranks:
///     an entry's rank is the index of its frequency, so rank 0 holds the
///     most frequent paraphrases and everything seen once lands together on
///     the bottom rank;
///   - entries are ordered by (rank, text).
/// Throws std::invalid_argument when `records` is empty or some compound is
/// left with no valid paraphrase.
CompileResult compile_gold(const std::vector<AnnotationRecord>& records);

struct DatasetStats {
  std::size_t compounds = 0;
  // totals across the dataset
  std::size_t total_paraphrases = 0;   // duplicates included (sum of frequencies)
  std::size_t unique_paraphrases = 0;  // merged entries
  // per-compound spread, duplicates included
  std::size_t min_total = 0, max_total = 0;
  double avg_total = 0.0;
  // per-compound spread, unique
  std::size_t min_unique = 0, max_unique = 0;
  double avg_unique = 0.0;
};

DatasetStats dataset_stats(const std::vector<GoldList>& gold);

/// 9706 -> "9,706".
std::string group_thousands(std::size_t n);

}  // namespace ncpara

#endif  // NCPARA_GOLD_PIPELINE_HPP
