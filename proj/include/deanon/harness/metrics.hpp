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

#ifndef DEANON_HARNESS_METRICS_HPP_
#define DEANON_HARNESS_METRICS_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "deanon/attack/attack.hpp"
#include "deanon/core/ground_truth.hpp"

namespace deanon {

struct AttackMetrics {
  size_t n_targets = 0;
  double top1_accuracy = 0.0;
  // Fraction of targets whose true identity is anywhere in the candidates.
  double candidate_recall = 0.0;
  // 1-based rank of the truth, averaged over recalled targets; 0 when no
  // target was recalled.
  double mean_rank_of_truth = 0.0;
  double mean_queries = 0.0;
};

inline AttackMetrics EvaluateAttack(std::span<const MappingResult> mappings,
                                    const GroundTruth& truth) {
  AttackMetrics m;
  m.n_targets = mappings.size();
  if (mappings.empty()) return m;
  size_t correct = 0, recalled = 0, rank_sum = 0, queries = 0;
  for (const MappingResult& r : mappings) {
    const UserId& real = truth.PublicId(r.target);
    if (r.claimed && *r.claimed == real) ++correct;
    for (size_t i = 0; i < r.ranked_candidates.size(); ++i) {
      if (r.ranked_candidates[i].user == real) {
        ++recalled;
        rank_sum += i + 1;
        break;
      }
    }
    queries += r.queries_used;
  }
  const double n = static_cast<double>(mappings.size());
  m.top1_accuracy = static_cast<double>(correct) / n;
  m.candidate_recall = static_cast<double>(recalled) / n;
  m.mean_rank_of_truth =
      recalled ? static_cast<double>(rank_sum) / static_cast<double>(recalled) : 0.0;
  m.mean_queries = static_cast<double>(queries) / n;
  return m;
}

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for fewer than 2 values
};

inline MeanStd Summarize(std::span<const double> values) {
  MeanStd s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

}  // namespace deanon

#endif  // DEANON_HARNESS_METRICS_HPP_
