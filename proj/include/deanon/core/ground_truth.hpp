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

#ifndef DEANON_CORE_GROUND_TRUTH_HPP_
#define DEANON_CORE_GROUND_TRUTH_HPP_

// Evaluation-only. Nothing under deanon/attack/ may include this header; the
// dependency check in tests/ enforces it.

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>

#include "deanon/core/user_id.hpp"
#include "deanon/error.hpp"

namespace deanon {

namespace probe {

// Counts every read of a GroundTruth mapping in the process. Tests snapshot
// it around an attack run to show the attack never touches the answer key.
inline std::atomic<uint64_t>& GroundTruthReads() {
  static std::atomic<uint64_t> reads{0};
  return reads;
}

}  // namespace probe

// Bijection from anonymized ids to the platform ids they were derived from.
class GroundTruth {
 public:
  GroundTruth() = default;

  void Add(const UserId& anon, const UserId& real) {
    if (forward_.contains(anon)) {
      throw Error("core-model", "anonymized id '" + anon.str() +
                                    "' mapped twice in ground truth");
    }
    if (!backward_.emplace(real, anon).second) {
      throw Error("core-model", "public id '" + real.str() +
                                    "' mapped twice in ground truth");
    }
    forward_.emplace(anon, real);
  }

  // Throws NotFoundError when `anon` is outside the domain.
  const UserId& PublicId(const UserId& anon) const {
    probe::GroundTruthReads().fetch_add(1, std::memory_order_relaxed);
    auto it = forward_.find(anon);
    if (it == forward_.end()) {
      throw NotFoundError("eval-harness", "target '" + anon.str() +
                                              "' is not in the ground truth");
    }
    return it->second;
  }

  std::optional<UserId> AnonId(const UserId& real) const {
    probe::GroundTruthReads().fetch_add(1, std::memory_order_relaxed);
    auto it = backward_.find(real);
    if (it == backward_.end()) return std::nullopt;
    return it->second;
  }

  bool Contains(const UserId& anon) const {
    probe::GroundTruthReads().fetch_add(1, std::memory_order_relaxed);
    return forward_.contains(anon);
  }

  size_t size() const { return forward_.size(); }

  const std::map<UserId, UserId>& mapping() const {
    probe::GroundTruthReads().fetch_add(1, std::memory_order_relaxed);
    return forward_;
  }

  friend bool operator==(const GroundTruth& a, const GroundTruth& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::map<UserId, UserId> forward_;
  std::map<UserId, UserId> backward_;
};

}  // namespace deanon

#endif  // DEANON_CORE_GROUND_TRUTH_HPP_
