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

#include "ncpara/match_engine.hpp"

#include <stdexcept>

namespace ncpara {

double word_match(std::string_view gold_word, std::string_view test_word) {
  if (gold_word == test_word) return 1.0;
  const std::size_t prefix = common_prefix_length(gold_word, test_word);
  if (prefix < 3) return 0.0;
  const double ratio =
      2.0 * static_cast<double>(prefix) /
      static_cast<double>(utf8_length(gold_word) + utf8_length(test_word));
  return ratio * ratio;
}

std::optional<double> ngram_match(std::span<const std::string> gold,
                                  std::span<const std::string> test) {
  if (gold.size() != test.size()) {
    throw std::invalid_argument("ngram_match: n-gram lengths differ");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const double score = word_match(gold[i], test[i]);
    if (score == 0.0) return std::nullopt;
    sum += score;
  }
  return sum;
}

double overlap_score(const TokenSeq& test, const TokenSeq& gold) {
  if (test.empty()) {
    throw std::invalid_argument("overlap_score: empty test sequence");
  }
  const std::span<const std::string> t(test);
  const std::span<const std::string> g(gold);
  double total = 0.0;
  for (std::size_t n = 1; n <= t.size(); ++n) {
    for (std::size_t start = 0; start + n <= t.size(); ++start) {
      const auto test_gram = t.subspan(start, n);
      double best = 0.0;  // strict > keeps the leftmost gold n-gram on ties
      if (g.size() >= n) {
        for (std::size_t gstart = 0; gstart + n <= g.size(); ++gstart) {
          const auto match = ngram_match(g.subspan(gstart, n), test_gram);
          if (match && *match > best) best = *match;
        }
      }
      total += best;
    }
  }
  return total;
}

double self_score(const TokenSeq& seq) {
  if (seq.empty()) {
    throw std::invalid_argument("self_score: empty sequence");
  }
  return overlap_score(seq, seq);
}

double normalized_overlap(const TokenSeq& test, const TokenSeq& gold) {
  if (test.empty() || gold.empty()) {
    throw std::invalid_argument("normalized_overlap: empty sequence");
  }
  const double ceiling = std::max(self_score(test), self_score(gold));
  return overlap_score(test, gold) / ceiling;
}

}  // namespace ncpara
