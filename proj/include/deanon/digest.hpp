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

#ifndef DEANON_DIGEST_HPP_
#define DEANON_DIGEST_HPP_

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace deanon {

// 64-bit FNV-1a. Used for short, stable argument and config digests; not a
// cryptographic hash.
class Fnv1a {
 public:
  Fnv1a& Update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      state_ ^= c;
      state_ *= 0x100000001b3ULL;
    }
    return *this;
  }

  // Separator that cannot occur in tab-free identifiers.
  Fnv1a& Field(std::string_view bytes) {
    Update(bytes);
    return Update(std::string_view("\x1f", 1));
  }

  uint64_t value() const { return state_; }

  std::string Hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(state_));
    return buf;
  }

 private:
  uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::string DigestHex(std::string_view bytes) {
  return Fnv1a().Update(bytes).Hex();
}

}  // namespace deanon

#endif  // DEANON_DIGEST_HPP_
