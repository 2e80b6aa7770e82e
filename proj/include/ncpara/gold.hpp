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

#ifndef NCPARA_GOLD_HPP
#define NCPARA_GOLD_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncpara/text_norm.hpp"

namespace ncpara {

/// A two-word noun compound, e.g. modifier "air", head "filter".
struct Compound {
  std::string modifier;
  std::string head;

  auto operator<=>(const Compound&) const = default;
};

/// "air filter" for {modifier: air, head: filter}.
inline std::string display(const Compound& c) {
  return c.modifier + " " + c.head;
}

/// One reference paraphrase in a compiled gold standard. `tokens` is the
/// canonical tokenized form (determiners retained; they are removed at
/// scoring time, not at compile time).
struct GoldEntry {
  TokenSeq tokens;
  int rank = 0;       // 0 = most frequent tier
  int frequency = 1;  // number of annotators who proposed it

  std::string text() const { return join_tokens(tokens); }

  bool operator==(const GoldEntry&) const = default;
};

/// The ranked reference paraphrases for one compound. Entries are ordered by
/// (rank, text); ranks are consecutive from 0 and frequencies strictly
/// decrease as rank increases.
struct GoldList {
  Compound compound;
  std::vector<GoldEntry> entries;

  bool operator==(const GoldList&) const = default;
};

/// One raw annotation: a paraphrase proposed for a compound by one annotator.
struct AnnotationRecord {
  Compound compound;
  std::string paraphrase;
  std::optional<std::string> annotator;
  std::size_t line = 0;  // 1-based source line, 0 if not file-backed
};

/// A system's ordered paraphrase list for one compound. Order is the system's
/// explicit ranking and is preserved from the input.
struct SubmissionEntry {
  Compound compound;
  std::vector<std::string> paraphrases;
};

struct SystemSubmission {
  std::string name;
  std::vector<SubmissionEntry> entries;
};

}  // namespace ncpara

#endif  // NCPARA_GOLD_HPP
