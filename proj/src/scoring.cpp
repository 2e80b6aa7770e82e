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

#include "ncpara/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ncpara/match_engine.hpp"

namespace ncpara {

double rank_multiplier(int rank, double rank_r) {
  if (rank < 0 || rank_r <= 0.0) {
    throw std::invalid_argument("rank_multiplier: rank must be >= 0 and R > 0");
  }
  return rank_r / (rank_r + static_cast<double>(rank));
}

GoldList strip_gold(GoldList gold, const DeterminerSet& determiners) {
  for (auto& entry : gold.entries) {
    entry.tokens = strip_determiners(std::move(entry.tokens), determiners);
  }
  return gold;
}

std::optional<GoldMatch> best_gold_match(const TokenSeq& test,
                                         const GoldList& gold,
                                         const std::set<std::size_t>& excluded,
                                         double rank_r) {
  if (test.empty()) return std::nullopt;
  std::optional<GoldMatch> best;
  for (std::size_t i = 0; i < gold.entries.size(); ++i) {
    if (excluded.contains(i)) continue;
    const GoldEntry& entry = gold.entries[i];
    if (entry.tokens.empty()) continue;
    const double overlap = normalized_overlap(test, entry.tokens);
    const double weighted = overlap * rank_multiplier(entry.rank, rank_r);
    // Strict > resolves ties toward the lower rank and then the earlier
    // entry, since entries are ordered by (rank, position).
    if (weighted > 0.0 && (!best || weighted > best->weighted)) {
      best = GoldMatch{i, weighted, overlap};
    }
  }
  return best;
}

double score_compound_noniso(const std::vector<TokenSeq>& tests,
                             const GoldList& gold, double rank_r) {
  if (tests.empty()) return 0.0;
  std::vector<double> addends;
  addends.reserve(tests.size());
  for (const auto& test : tests) {
    const auto match = best_gold_match(test, gold, {}, rank_r);
    addends.push_back(match ? match->weighted : 0.0);
  }
  // Summing in sorted order makes the mean bit-identical under any
  // permutation of the submission.
  std::sort(addends.begin(), addends.end());
  double sum = 0.0;
  for (const double a : addends) sum += a;
  return sum / static_cast<double>(tests.size());
}

double score_compound_iso(const std::vector<TokenSeq>& tests,
                          const GoldList& gold, double rank_r) {
  double denominator = 0.0;
  for (const auto& entry : gold.entries) {
    denominator += rank_multiplier(entry.rank, rank_r);
  }
  if (denominator <= 0.0) return 0.0;

  std::set<std::size_t> consumed;
  double sum = 0.0;
  for (const auto& test : tests) {
    const auto match = best_gold_match(test, gold, consumed, rank_r);
    if (!match) continue;  // an unmatched paraphrase consumes nothing
    consumed.insert(match->entry_index);
    sum += match->weighted;
  }
  return std::clamp(sum / denominator, 0.0, 1.0);
}

namespace {

struct PreparedTest {
  std::string text;     // canonical tokenized form, determiners retained
  TokenSeq stripped;
};

// Tokenizes, deduplicates (first occurrence wins), and strips determiners.
std::vector<PreparedTest> prepare_tests(const Compound& compound,
                                        const std::vector<std::string>& raw,
                                        const DeterminerSet& determiners,
                                        std::vector<std::string>& warnings) {
  std::vector<PreparedTest> prepared;
  std::set<std::string> seen;
  for (const auto& paraphrase : raw) {
    const TokenSeq tokens = tokenize_lenient(paraphrase);
    const std::string text = join_tokens(tokens);
    if (tokens.empty()) {
      warnings.push_back(display(compound) + ": blank paraphrase; scored 0");
      prepared.push_back({text, {}});
      continue;
    }
    if (!seen.insert(text).second) {
      warnings.push_back(display(compound) + ": duplicate paraphrase \"" +
                         text + "\" ignored (first occurrence kept)");
      continue;
    }
    TokenSeq stripped = strip_determiners(tokens, determiners);
    if (stripped.empty()) {
      warnings.push_back(display(compound) + ": paraphrase \"" + text +
                         "\" is empty after determiner removal; scored 0");
    }
    prepared.push_back({text, std::move(stripped)});
  }
  return prepared;
}

CompoundScore score_one_compound(const GoldList& gold_raw,
                                 const std::vector<std::string>* paraphrases,
                                 const ScoreOptions& options) {
  CompoundScore score;
  score.compound = gold_raw.compound;
  if (paraphrases == nullptr) {
    score.warnings.push_back(display(gold_raw.compound) +
                             ": no paraphrases in submission; scored 0");
    return score;
  }
  score.in_submission = true;

  const GoldList gold = strip_gold(gold_raw, options.determiners);
  const std::vector<PreparedTest> tests =
      prepare_tests(gold.compound, *paraphrases, options.determiners,
                    score.warnings);

  std::vector<TokenSeq> stripped;
  stripped.reserve(tests.size());
  for (const auto& test : tests) stripped.push_back(test.stripped);

  score.noniso = score_compound_noniso(stripped, gold, options.rank_r);
  score.iso = score_compound_iso(stripped, gold, options.rank_r);

  // Re-run the two matchings to record which entry each paraphrase took.
  std::set<std::size_t> consumed;
  for (const auto& test : tests) {
    ParaphraseMatch noniso_match{test.text, std::nullopt, 0.0};
    if (const auto m = best_gold_match(test.stripped, gold, {}, options.rank_r)) {
      noniso_match.gold_index = m->entry_index;
      noniso_match.weighted = m->weighted;
    }
    score.noniso_matches.push_back(std::move(noniso_match));

    ParaphraseMatch iso_match{test.text, std::nullopt, 0.0};
    if (const auto m =
            best_gold_match(test.stripped, gold, consumed, options.rank_r)) {
      consumed.insert(m->entry_index);
      iso_match.gold_index = m->entry_index;
      iso_match.weighted = m->weighted;
    }
    score.iso_matches.push_back(std::move(iso_match));
  }
  return score;
}

}  // namespace

ScoreReport score_system(const SystemSubmission& submission,
                         const std::vector<GoldList>& gold,
                         const ScoreOptions& options) {
  if (gold.empty()) {
    throw std::invalid_argument("score_system: empty gold dataset");
  }
  if (options.rank_r <= 0.0) {
    throw std::invalid_argument("score_system: R must be positive");
  }

  std::map<Compound, const std::vector<std::string>*> by_compound;
  for (const auto& entry : submission.entries) {
    if (!by_compound.emplace(entry.compound, &entry.paraphrases).second) {
      throw std::invalid_argument("score_system: duplicate compound '" +
                                  display(entry.compound) + "' in submission");
    }
  }

  ScoreReport report;
  report.system_name = submission.name;
  report.rank_r = options.rank_r;

  std::set<Compound> known;
  for (const auto& list : gold) known.insert(list.compound);
  for (const auto& entry : submission.entries) {
    if (!known.contains(entry.compound)) {
      report.warnings.push_back("unknown compound '" + display(entry.compound) +
                                "' not in gold; ignored");
    }
  }

  double iso_sum = 0.0;
  double noniso_sum = 0.0;
  for (const auto& list : gold) {
    const auto it = by_compound.find(list.compound);
    CompoundScore score = score_one_compound(
        list, it == by_compound.end() ? nullptr : it->second, options);
    iso_sum += score.iso;
    noniso_sum += score.noniso;
    for (const auto& warning : score.warnings) report.warnings.push_back(warning);
    report.per_compound.push_back(std::move(score));
  }
  report.mean_iso = iso_sum / static_cast<double>(gold.size());
  report.mean_noniso = noniso_sum / static_cast<double>(gold.size());
  return report;
}

std::string format_fixed1(double value) {
  // Half-even rounding at one decimal, done on an explicit integer so the
  // rendering is independent of printf's rounding mode.
  const double scaled = value * 10.0;
  double floor_val = std::floor(scaled);
  const double diff = scaled - floor_val;
  long long tenths = static_cast<long long>(floor_val);
  if (diff > 0.5) {
    ++tenths;
  } else if (diff == 0.5 && (tenths % 2 != 0)) {
    ++tenths;
  }
  std::string out;
  if (tenths < 0) {
    out += '-';
    tenths = -tenths;
  }
  out += std::to_string(tenths / 10);
  out += '.';
  out += std::to_string(tenths % 10);
  return out;
}

std::string format_score_x100(double score) { return format_fixed1(score * 100.0); }

}  // namespace ncpara
