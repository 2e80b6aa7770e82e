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
// Rank-weighted scoring of system paraphrase lists against a gold standard.
//
// A match against a gold paraphrase at rank n is scaled by R/(R + n), so
// reproducing popular paraphrases pays more than reproducing rare ones.
// Per compound there are two scores:
//
//   isomorphic      - test paraphrases are matched 1-to-1 with gold entries,
//                     greedily in submission order, each taking the available
//                     entry that maximizes overlap x rank multiplier; the sum
//                     is divided by the total multiplier mass of the gold
//                     list, so full marks require covering the whole list in
//                     a sensible order, not just landing a few good hits.
//   non-isomorphic  - every test paraphrase independently takes its best gold
//                     entry (many-to-one) and the per-paraphrase scores are
//                     averaged; only the quality of each individual guess
//                     counts, and order is irrelevant.
//
// A system's aggregate score in either mode is the mean over all gold
// compounds; compounds missing from the submission count as 0.

#ifndef NCPARA_SCORING_HPP
#define NCPARA_SCORING_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ncpara/gold.hpp"
#include "ncpara/text_norm.hpp"

namespace ncpara {

inline constexpr double kDefaultRankR = 8.0;

struct ScoreOptions {
  double rank_r = kDefaultRankR;
  DeterminerSet determiners = default_determiners();
};

/// R/(R + rank). Decreasing in rank, 1.0 at rank 0; R=8 gives 8/13 = 0.615
/// at rank 5.
double rank_multiplier(int rank, double rank_r);

/// Removes determiners from every entry's tokens. Entries may come out empty;
/// they score 0 downstream instead of erroring.
GoldList strip_gold(GoldList gold, const DeterminerSet& determiners);

struct GoldMatch {
  std::size_t entry_index = 0;
  double weighted = 0.0;  // normalized_overlap x rank_multiplier
  double overlap = 0.0;   // normalized_overlap alone
};

/// The gold entry (outside `excluded`) maximizing normalized overlap times
/// rank multiplier for `test`, or nullopt when every candidate scores 0.
/// Ties go to the lower rank, then the earlier entry. Expects both sides
/// already determiner-stripped; empty sequences simply never match.
std::optional<GoldMatch> best_gold_match(const TokenSeq& test,
                                         const GoldList& gold,
                                         const std::set<std::size_t>& excluded,
                                         double rank_r);

/// Mean over `tests` of the best weighted match (0 for unmatched); exclusions
/// are never applied, so any number of tests may hit the same entry. Empty
/// `tests` scores 0. Invariant under permutation of `tests`.
double score_compound_noniso(const std::vector<TokenSeq>& tests,
                             const GoldList& gold, double rank_r);

/// Greedy 1-to-1 matching in submission order: each test takes its best
/// not-yet-consumed entry (an unmatched test consumes nothing). The sum of
/// weighted scores is divided by the sum of rank multipliers over all gold
/// entries and clamped to [0, 1].
double score_compound_iso(const std::vector<TokenSeq>& tests,
                          const GoldList& gold, double rank_r);

/// Which gold entry one test paraphrase was matched with, if any.
struct ParaphraseMatch {
  std::string text;  // canonical tokenized form of the test paraphrase
  std::optional<std::size_t> gold_index;
  double weighted = 0.0;
};

struct CompoundScore {
  Compound compound;
  bool in_submission = false;
  double iso = 0.0;
  double noniso = 0.0;
  std::vector<ParaphraseMatch> iso_matches;
  std::vector<ParaphraseMatch> noniso_matches;
  std::vector<std::string> warnings;
};

struct ScoreReport {
  std::string system_name;
  double rank_r = kDefaultRankR;
  double mean_iso = 0.0;
  double mean_noniso = 0.0;
  std::vector<CompoundScore> per_compound;  // one per gold compound, in order
  std::vector<std::string> warnings;
};

/// Scores a whole submission against the gold dataset. Tokenizes and
/// deduplicates each compound's paraphrases (first occurrence wins, with a
/// warning), strips determiners from both sides, and reports per-compound and
/// mean scores plus match diagnostics. Compounds missing from the submission
/// score 0 with a warning; submission compounds unknown to the gold are
/// ignored with a warning. Throws std::invalid_argument on an empty gold
/// dataset, non-positive R, or a duplicate compound in the submission.
ScoreReport score_system(const SystemSubmission& submission,
                         const std::vector<GoldList>& gold,
                         const ScoreOptions& options = {});

/// Renders a [0,1] score the way leaderboards print it: x100 with one
/// decimal, ties rounded half-even ("0.615..." -> "61.5").
std::string format_score_x100(double score);

/// One-decimal fixed rendering with half-even ties; no grouping.
std::string format_fixed1(double value);

}  // namespace ncpara

#endif  // NCPARA_SCORING_HPP
