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

#ifndef DEANON_CORE_USER_ID_HPP_
#define DEANON_CORE_USER_ID_HPP_

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "deanon/error.hpp"

namespace deanon {

// Opaque user handle: a pseudonym in a release, a real handle on the
// platform. Non-empty and free of the tab/newline characters reserved by the
// file formats.
class UserId {
 public:
  explicit UserId(std::string value) : value_(std::move(value)) {
    if (!IsValid(value_)) {
      throw Error("core-model", "invalid user id '" + value_ + "'");
    }
  }

  static bool IsValid(std::string_view value) {
    return !value.empty() && value.find_first_of("\t\n\r") == value.npos;
  }

  const std::string& str() const { return value_; }

  friend auto operator<=>(const UserId&, const UserId&) = default;
  friend bool operator==(const UserId&, const UserId&) = default;

  friend std::ostream& operator<<(std::ostream& os, const UserId& id) {
    return os << id.value_;
  }

 private:
  std::string value_;
};

}  // namespace deanon

template <>
struct std::hash<deanon::UserId> {
  size_t operator()(const deanon::UserId& id) const noexcept {
    return std::hash<std::string>()(id.str());
  }
};

#endif  // DEANON_CORE_USER_ID_HPP_
