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

#ifndef DEANON_ATTACK_BATCH_HPP_
#define DEANON_ATTACK_BATCH_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "deanon/attack/attack.hpp"
#include "deanon/platform/platform_client.hpp"
#include "deanon/platform/platform_index.hpp"
#include "deanon/platform/query_log.hpp"

namespace deanon {

struct BatchResult {
  std::vector<MappingResult> mappings;  // same order as the targets
  QueryLog log;                         // per-target logs, in target order
};

// Attacks every target with its own platform client. With jobs > 1 targets
// are spread over worker threads; results and the merged log do not depend on
// the number of jobs.
inline BatchResult AttackAll(const Attacker& attacker, const PlatformIndex& index,
                             const std::vector<UserId>& targets, size_t jobs = 1) {
  const size_t n = targets.size();
  std::vector<std::optional<MappingResult>> results(n);
  std::vector<QueryLog> logs(n);
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  PlatformFeatureCache shared;

  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        PlatformClient client(index, logs[i], attacker.config().query_budget);
        results[i] = attacker.MapUser(targets[i], client, &shared);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::clamp<size_t>(jobs, 1, std::max<size_t>(n, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  BatchResult out;
  out.mappings.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.mappings.push_back(std::move(*results[i]));
    out.log.Merge(logs[i]);
  }
  return out;
}

}  // namespace deanon

#endif  // DEANON_ATTACK_BATCH_HPP_
