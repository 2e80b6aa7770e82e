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

#ifndef NCPARA_BASELINE_HPP
#define NCPARA_BASELINE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ncpara/gold.hpp"

namespace ncpara {

/// The fixed ten-paraphrase baseline for a compound M H, in this exact order:
/// H of M, H in M, H for M, H with M, H on M, H about M, H has M, H to M,
/// H used for M, H used in M. Every compound gets these same ten templates.
std::vector<std::string> naive_baseline(const Compound& compound);

/// Popularity-trained variant: extracts the linking phrase between the first
/// head occurrence and the first later modifier occurrence of every training
/// paraphrase, ranks the resulting templates by summed training frequency
/// (ties broken lexicographically), and instantiates the top `k` for
/// `compound`. Paraphrases where head or modifier cannot be located are
/// skipped. Returns fewer than `k` entries when the template inventory is
/// smaller. Throws std::invalid_argument on an empty training set.
std::vector<std::string> trained_baseline(const std::vector<GoldList>& training,
                                          const Compound& compound,
                                          std::size_t k);

}  // namespace ncpara

#endif  // NCPARA_BASELINE_HPP
