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

#ifndef DEANON_ATTACK_ATTACK_CONFIG_HPP_
#define DEANON_ATTACK_ATTACK_CONFIG_HPP_

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

#include "deanon/error.hpp"

namespace deanon {

// Mixing weights of the four similarity components. Valid weights are
// non-negative and sum to one.
struct FeatureWeights {
  double text = 0.40;
  double structure = 0.20;
  double neighbor_text = 0.25;
  double neighbor_structure = 0.15;

  // Scales arbitrary non-negative weights to unit sum.
  static FeatureWeights Normalized(const std::array<double, 4>& raw) {
    double sum = 0.0;
    for (double w : raw) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw Error("attack", "weights must be finite and non-negative");
      }
      sum += w;
    }
    if (!(sum > 0.0)) throw Error("attack", "weights must not all be zero");
    return {raw[0] / sum, raw[1] / sum, raw[2] / sum, raw[3] / sum};
  }

  std::array<double, 4> AsArray() const {
    return {text, structure, neighbor_text, neighbor_structure};
  }

  void Validate() const {
    double sum = 0.0;
    for (double w : AsArray()) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw Error("attack", "weights must be finite and non-negative");
      }
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw Error("attack", "weights must sum to 1 (got " +
                                std::to_string(sum) + ")");
    }
  }
};

// Logarithmic degree buckets: [1], [2], [3,4], [5,8], ..., with every degree
// above 2^(max_bucket-1) pooled into the last bucket. Degree 0 shares the
// first bucket.
struct DegreeBuckets {
  size_t max_bucket = 12;

  size_t size() const { return max_bucket + 1; }

  size_t Index(size_t degree) const {
    if (degree <= 1) return 0;
    const size_t b = static_cast<size_t>(std::bit_width(degree - 1));
    return b < max_bucket ? b : max_bucket;
  }
};

struct AttackConfig {
  size_t top_k_posts = 5;
  size_t candidate_limit = 50;
  FeatureWeights weights;
  DegreeBuckets buckets;
  // Maximum platform calls per target; unset means unlimited.
  std::optional<size_t> query_budget;

  void Validate() const {
    if (top_k_posts < 1) throw Error("attack", "top_k_posts must be >= 1");
    if (candidate_limit < 1) throw Error("attack", "candidate limit must be >= 1");
    if (buckets.max_bucket < 1) throw Error("attack", "need at least two buckets");
    weights.Validate();
  }
};

}  // namespace deanon

#endif  // DEANON_ATTACK_ATTACK_CONFIG_HPP_
