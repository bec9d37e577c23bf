// Copyright 2026 The deanon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEANON_CORE_TOKENIZE_HPP_
#define DEANON_CORE_TOKENIZE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace deanon {

namespace internal {

inline bool IsAsciiAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

}  // namespace internal

// Splits `text` into lowercase word tokens.
//
// ASCII letters and digits are word characters; every other ASCII byte is a
// separator. Non-ASCII code points are kept verbatim as word characters (no
// case folding), so the result never depends on the process locale. Tokens
// shorter than two code points are dropped. No stemming, no stop words.
inline std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  size_t code_points = 0;
  auto flush = [&] {
    if (code_points >= 2) tokens.push_back(current);
    current.clear();
    code_points = 0;
  };
  for (unsigned char c : text) {
    if (c >= 0x80) {
      current.push_back(static_cast<char>(c));
      // Continuation bytes do not start a new code point.
      if ((c & 0xC0) != 0x80) ++code_points;
    } else if (internal::IsAsciiAlnum(c)) {
      current.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c));
      ++code_points;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

// Inverse used by the text anonymizers: a space-joined token list
// re-tokenizes to itself.
inline std::string JoinTokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace deanon

#endif  // DEANON_CORE_TOKENIZE_HPP_
