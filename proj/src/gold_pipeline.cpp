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

#include "ncpara/gold_pipeline.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncpara {

std::string_view to_string(InvalidReason reason) {
  switch (reason) {
    case InvalidReason::kEmpty:
      return "empty";
    case InvalidReason::kMissingHead:
      return "missing-head";
    case InvalidReason::kMissingModifier:
      return "missing-modifier";
    case InvalidReason::kWrongOrder:
      return "wrong-order";
    case InvalidReason::kNoLinkingPhrase:
      return "no-linking-phrase";
  }
  return "unknown";
}

ValidationVerdict validate_paraphrase(const Compound& compound,
                                      const TokenSeq& tokens) {
  if (tokens.empty()) return {InvalidReason::kEmpty};

  const auto head_forms = inflection_variants(compound.head);
  const auto modifier_forms = inflection_variants(compound.modifier);

  std::vector<std::size_t> head_at;
  std::vector<std::size_t> modifier_at;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (head_forms.contains(tokens[i])) head_at.push_back(i);
    if (modifier_forms.contains(tokens[i])) modifier_at.push_back(i);
  }
  if (head_at.empty()) return {InvalidReason::kMissingHead};
  if (modifier_at.empty()) return {InvalidReason::kMissingModifier};

  // The head must come first, with at least one linking token before the
  // modifier: "filter for air", never "air filter" or "air from a filter".
  bool ordered = false;
  for (const std::size_t h : head_at) {
    for (const std::size_t m : modifier_at) {
      if (m > h) {
        ordered = true;
        if (m >= h + 2) return {};  // valid
      }
    }
  }
  return {ordered ? InvalidReason::kNoLinkingPhrase : InvalidReason::kWrongOrder};
}

ValidationVerdict validate_paraphrase(const Compound& compound,
                                      const std::string& paraphrase) {
  return validate_paraphrase(compound, tokenize_lenient(paraphrase));
}

CompileResult compile_gold(const std::vector<AnnotationRecord>& records) {
  if (records.empty()) {
    throw std::invalid_argument("compile_gold: no records");
  }

  CompileResult result;

  // compound -> canonical paraphrase text -> (tokens, frequency)
  struct Merged {
    TokenSeq tokens;
    int frequency = 0;
  };
  std::map<Compound, std::map<std::string, Merged>> merged;
  std::map<Compound, bool> seen;

  for (const auto& record : records) {
    seen[record.compound];  // remember even if every paraphrase is dropped
    TokenSeq tokens = tokenize_lenient(record.paraphrase);
    const ValidationVerdict verdict = validate_paraphrase(record.compound, tokens);
    if (!verdict.valid()) {
      std::string warning;
      if (record.line > 0) warning += "line " + std::to_string(record.line) + ": ";
      warning += display(record.compound) + ": ill-formed paraphrase \"" +
                 record.paraphrase + "\" (" +
                 std::string(to_string(*verdict.reason)) + "); skipped";
      result.warnings.push_back(std::move(warning));
      continue;
    }
    Merged& slot = merged[record.compound][join_tokens(tokens)];
    if (slot.frequency == 0) slot.tokens = std::move(tokens);
    ++slot.frequency;
  }

  for (const auto& [compound, was_seen] : seen) {
    (void)was_seen;
    if (!merged.contains(compound)) {
      throw std::invalid_argument("compile_gold: compound '" +
                                  display(compound) +
                                  "' has no valid paraphrases");
    }
  }

  for (auto& [compound, paraphrases] : merged) {
    // Distinct frequencies, descending, define the ranks. Frequency-1
    // paraphrases end up sharing the largest rank by construction.
    std::vector<int> freqs;
    for (const auto& [text, entry] : paraphrases) freqs.push_back(entry.frequency);
    std::sort(freqs.begin(), freqs.end(), std::greater<>());
    freqs.erase(std::unique(freqs.begin(), freqs.end()), freqs.end());

    GoldList list;
    list.compound = compound;
    for (auto& [text, entry] : paraphrases) {
      const auto it = std::find(freqs.begin(), freqs.end(), entry.frequency);
      GoldEntry gold_entry;
      gold_entry.tokens = std::move(entry.tokens);
      gold_entry.rank = static_cast<int>(it - freqs.begin());
      gold_entry.frequency = entry.frequency;
      list.entries.push_back(std::move(gold_entry));
    }
    // The per-compound map iterates in text order, so a stable sort by rank
    // leaves entries ordered by (rank, text).
    std::stable_sort(list.entries.begin(), list.entries.end(),
                     [](const GoldEntry& a, const GoldEntry& b) {
                       return a.rank < b.rank;
                     });
    result.gold.push_back(std::move(list));
  }

  return result;
}

DatasetStats dataset_stats(const std::vector<GoldList>& gold) {
  DatasetStats stats;
  stats.compounds = gold.size();
  if (gold.empty()) return stats;

  bool first = true;
  for (const auto& list : gold) {
    std::size_t total = 0;
    for (const auto& entry : list.entries) {
      total += static_cast<std::size_t>(entry.frequency);
    }
    const std::size_t unique = list.entries.size();
    stats.total_paraphrases += total;
    stats.unique_paraphrases += unique;
    if (first) {
      stats.min_total = stats.max_total = total;
      stats.min_unique = stats.max_unique = unique;
      first = false;
    } else {
      stats.min_total = std::min(stats.min_total, total);
      stats.max_total = std::max(stats.max_total, total);
      stats.min_unique = std::min(stats.min_unique, unique);
      stats.max_unique = std::max(stats.max_unique, unique);
    }
  }
  stats.avg_total = static_cast<double>(stats.total_paraphrases) /
                    static_cast<double>(stats.compounds);
  stats.avg_unique = static_cast<double>(stats.unique_paraphrases) /
                     static_cast<double>(stats.compounds);
  return stats;
}

std::string group_thousands(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string grouped;
  const std::size_t size = digits.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (i > 0 && (size - i) % 3 == 0) grouped += ',';
    grouped += digits[i];
  }
  return grouped;
}

}  // namespace ncpara
