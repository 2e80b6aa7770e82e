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

#include "ncpara/baseline.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string_view>

#include "ncpara/text_norm.hpp"

namespace ncpara {

namespace {

// The order is part of the contract; do not sort.
constexpr std::array<std::string_view, 10> kNaiveTemplates = {
    "of", "in", "for", "with", "on", "about", "has", "to", "used for",
    "used in"};

std::string instantiate(const Compound& compound, std::string_view link) {
  std::string paraphrase = compound.head;
  paraphrase += ' ';
  paraphrase += link;
  paraphrase += ' ';
  paraphrase += compound.modifier;
  return paraphrase;
}

}  // namespace

std::vector<std::string> naive_baseline(const Compound& compound) {
  std::vector<std::string> paraphrases;
  paraphrases.reserve(kNaiveTemplates.size());
  for (const auto link : kNaiveTemplates) {
    paraphrases.push_back(instantiate(compound, link));
  }
  return paraphrases;
}

std::vector<std::string> trained_baseline(const std::vector<GoldList>& training,
                                          const Compound& compound,
                                          std::size_t k) {
  if (training.empty()) {
    throw std::invalid_argument("trained_baseline: empty training set");
  }

  // Template -> summed annotator frequency. std::map keeps templates in
  // lexicographic order, which is the tie order after the stable sort below.
  std::map<std::string, long> frequency;
  for (const auto& list : training) {
    const auto head_forms = inflection_variants(list.compound.head);
    const auto modifier_forms = inflection_variants(list.compound.modifier);
    for (const auto& entry : list.entries) {
      const auto& tokens = entry.tokens;
      std::size_t head_at = tokens.size();
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (head_forms.contains(tokens[i])) {
          head_at = i;
          break;
        }
      }
      if (head_at == tokens.size()) continue;
      std::size_t modifier_at = tokens.size();
      for (std::size_t i = head_at + 1; i < tokens.size(); ++i) {
        if (modifier_forms.contains(tokens[i])) {
          modifier_at = i;
          break;
        }
      }
      if (modifier_at == tokens.size()) continue;
      if (modifier_at < head_at + 2) continue;  // no linking phrase to learn
      const TokenSeq link(tokens.begin() + static_cast<long>(head_at) + 1,
                          tokens.begin() + static_cast<long>(modifier_at));
      frequency[join_tokens(link)] += entry.frequency;
    }
  }

  std::vector<std::pair<std::string, long>> ranked(frequency.begin(),
                                                   frequency.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });

  std::vector<std::string> paraphrases;
  for (const auto& [link, count] : ranked) {
    if (paraphrases.size() == k) break;
    (void)count;
    paraphrases.push_back(instantiate(compound, link));
  }
  return paraphrases;
}

}  // namespace ncpara
