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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncpara/text_norm.hpp"

using namespace ncpara;

TEST_CASE("tokenize folds case and strips edge punctuation") {
  CHECK(tokenize("Filter for air.") == TokenSeq{"filter", "for", "air"});
  CHECK(tokenize("a filter that removes impurities from the air") ==
        TokenSeq{"a", "filter", "that", "removes", "impurities", "from", "the",
                 "air"});
  CHECK(tokenize("ice-cream  headache") == TokenSeq{"ice-cream", "headache"});
}

TEST_CASE("tokenize keeps internal apostrophes and hyphens") {
  CHECK(tokenize("dog's (kennel)") == TokenSeq{"dog's", "kennel"});
  CHECK(tokenize("\"well-known\" fact!") == TokenSeq{"well-known", "fact"});
  CHECK(tokenize("'quoted'") == TokenSeq{"quoted"});
}

TEST_CASE("tokenize folds Latin-1 uppercase") {
  CHECK(tokenize("Caf\xC3\x89,") == TokenSeq{"caf\xC3\xA9"});  // CAFÉ -> café
}

TEST_CASE("tokenize rejects empty input") {
  CHECK_THROWS_AS(tokenize(""), std::invalid_argument);
  CHECK_THROWS_AS(tokenize("   "), std::invalid_argument);
  CHECK_THROWS_AS(tokenize("... !?"), std::invalid_argument);
  CHECK(tokenize_lenient("...").empty());
}

TEST_CASE("strip_determiners removes configured words in order") {
  const auto& dets = default_determiners();
  CHECK(strip_determiners({"a", "filter", "that", "removes", "impurities",
                           "from", "the", "air"},
                          dets) ==
        TokenSeq{"filter", "that", "removes", "impurities", "from", "air"});
  CHECK(strip_determiners({"filter", "for", "air"}, dets) ==
        TokenSeq{"filter", "for", "air"});
  CHECK(strip_determiners({"the", "the", "a"}, dets).empty());

  const DeterminerSet wide{"a", "an", "the", "this", "that"};
  CHECK(strip_determiners({"this", "filter", "that", "cleans"}, wide) ==
        TokenSeq{"filter", "cleans"});
}

TEST_CASE("inflection variants") {
  CHECK(inflection_variants("filter") ==
        std::set<std::string>{"filter", "filters", "filteres"});
  CHECK(inflection_variants("body") ==
        std::set<std::string>{"body", "bodys", "bodyes", "bodies"});
  CHECK(inflection_variants("air") ==
        std::set<std::string>{"air", "airs", "aires"});
  // vowel + y keeps the plain forms only
  CHECK(inflection_variants("day") ==
        std::set<std::string>{"day", "days", "dayes"});
}

TEST_CASE("utf8 helpers") {
  CHECK(utf8_length("cutting") == 7);
  CHECK(utf8_length("caf\xC3\xA9") == 4);
  CHECK(common_prefix_length("cutting", "cuts") == 3);
  CHECK(common_prefix_length("cat", "dog") == 0);
  // common bytes must not count a split code point
  CHECK(common_prefix_length("caf\xC3\xA9", "caf\xC3\xA8") == 3);
}

namespace {

std::string random_raw(std::mt19937& rng) {
  static const std::vector<std::string> words{
      "Filter", "air", "THE", "a", "ice-cream", "works.", "(done)", "for,",
      "impurities!", "that's"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> len(1, 6);
  std::string raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    if (!raw.empty()) raw += (i % 2 == 0 ? "  " : " ");
    raw += words[pick(rng)];
  }
  return raw;
}

}  // namespace

TEST_CASE("tokenize is idempotent through re-serialization") {
  std::mt19937 rng(20260808);
  for (int i = 0; i < 300; ++i) {
    const std::string raw = random_raw(rng);
    const TokenSeq once = tokenize(raw);
    CHECK(tokenize(join_tokens(once)) == once);
  }
}

TEST_CASE("strip_determiners is idempotent and keeps a subsequence") {
  std::mt19937 rng(424242);
  const auto& dets = default_determiners();
  for (int i = 0; i < 300; ++i) {
    const TokenSeq tokens = tokenize(random_raw(rng));
    const TokenSeq stripped = strip_determiners(tokens, dets);
    CHECK(strip_determiners(stripped, dets) == stripped);
    // subsequence: every survivor appears in order in the original
    std::size_t at = 0;
    for (const auto& token : stripped) {
      while (at < tokens.size() && tokens[at] != token) ++at;
      REQUIRE(at < tokens.size());
      ++at;
    }
    for (const auto& token : stripped) {
      CHECK(!dets.contains(token));
      for (const char c : token) CHECK((c < 'A' || c > 'Z'));
    }
  }
}
