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

#include "ncpara/text_norm.hpp"

#include <stdexcept>

namespace ncpara {

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Edge punctuation only; hyphens and apostrophes inside a token survive.
bool is_edge_punct(unsigned char c) {
  switch (c) {
    case '.':
    case ',':
    case ';':
    case ':':
    case '!':
    case '?':
    case '"':
    case '\'':
    case '(':
    case ')':
      return true;
    default:
      return false;
  }
}

// ASCII A-Z plus the Latin-1 uppercase letters (<C3 80>..<C3 9E>, skipping
// the multiplication sign). Anything else passes through unchanged, which
// keeps the fold deterministic without locale or Unicode tables.
void fold_case(std::string& token) {
  for (std::size_t i = 0; i < token.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(token[i]);
    if (c >= 'A' && c <= 'Z') {
      token[i] = static_cast<char>(c + 32);
    } else if (c == 0xC3 && i + 1 < token.size()) {
      const unsigned char d = static_cast<unsigned char>(token[i + 1]);
      if (d >= 0x80 && d <= 0x9E && d != 0x97) {
        token[i + 1] = static_cast<char>(d + 0x20);
      }
    }
  }
}

std::size_t utf8_char_len(unsigned char lead) {
  if (lead < 0x80) return 1;
  if (lead >= 0xC0 && lead <= 0xDF) return 2;
  if (lead >= 0xE0 && lead <= 0xEF) return 3;
  if (lead >= 0xF0 && lead <= 0xF7) return 4;
  return 1;  // stray continuation or invalid byte: treat as opaque
}

}  // namespace

const DeterminerSet& default_determiners() {
  static const DeterminerSet determiners{"a", "an", "the"};
  return determiners;
}

TokenSeq tokenize_lenient(const std::string& raw) {
  TokenSeq tokens;
  std::size_t i = 0;
  while (i < raw.size()) {
    while (i < raw.size() && is_space(static_cast<unsigned char>(raw[i]))) ++i;
    std::size_t start = i;
    while (i < raw.size() && !is_space(static_cast<unsigned char>(raw[i]))) ++i;
    if (i == start) break;
    std::size_t end = i;
    while (start < end && is_edge_punct(static_cast<unsigned char>(raw[start])))
      ++start;
    while (end > start && is_edge_punct(static_cast<unsigned char>(raw[end - 1])))
      --end;
    if (end == start) continue;
    std::string token = raw.substr(start, end - start);
    fold_case(token);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

TokenSeq tokenize(const std::string& raw) {
  TokenSeq tokens = tokenize_lenient(raw);
  if (tokens.empty()) {
    throw std::invalid_argument("tokenize: no tokens survive in \"" + raw + "\"");
  }
  return tokens;
}

std::string join_tokens(const TokenSeq& tokens) {
  std::string joined;
  for (const auto& token : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += token;
  }
  return joined;
}

TokenSeq strip_determiners(TokenSeq seq, const DeterminerSet& determiners) {
  std::erase_if(seq, [&](const std::string& token) {
    return determiners.contains(token);
  });
  return seq;
}

std::set<std::string> inflection_variants(const std::string& noun) {
  std::set<std::string> variants{noun, noun + "s", noun + "es"};
  if (noun.size() >= 2 && noun.back() == 'y') {
    const char before = noun[noun.size() - 2];
    const bool vowel = before == 'a' || before == 'e' || before == 'i' ||
                       before == 'o' || before == 'u';
    if (!vowel && before >= 'a' && before <= 'z') {
      variants.insert(noun.substr(0, noun.size() - 1) + "ies");
    }
  }
  return variants;
}

std::size_t utf8_length(std::string_view word) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < word.size();
       i += utf8_char_len(static_cast<unsigned char>(word[i]))) {
    ++count;
  }
  return count;
}

std::size_t common_prefix_length(std::string_view a, std::string_view b) {
  std::size_t bytes = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (bytes < limit && a[bytes] == b[bytes]) ++bytes;
  // Count only code points that fit entirely inside the common byte prefix.
  std::size_t count = 0;
  for (std::size_t i = 0; i < bytes;) {
    const std::size_t len = utf8_char_len(static_cast<unsigned char>(a[i]));
    if (i + len > bytes) break;
    ++count;
    i += len;
  }
  return count;
}

}  // namespace ncpara
