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

#ifndef DEANON_PLATFORM_QUERY_LOG_HPP_
#define DEANON_PLATFORM_QUERY_LOG_HPP_

#include <cstddef>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace deanon {

struct QueryLogEntry {
  std::string operation;
  std::string argument_digest;

  friend bool operator==(const QueryLogEntry&, const QueryLogEntry&) = default;
};

// Append-only record of platform calls. Appends are serialized, so one log
// may be shared by concurrent clients; per-worker logs can be merged in a
// fixed order instead when the entry order must be reproducible.
class QueryLog {
 public:
  QueryLog() = default;
  QueryLog(const QueryLog& other) : entries_(other.Entries()) {}
  QueryLog& operator=(const QueryLog& other) {
    if (this != &other) {
      auto copy = other.Entries();
      std::lock_guard lock(mu_);
      entries_ = std::move(copy);
    }
    return *this;
  }

  void Append(std::string operation, std::string argument_digest) {
    std::lock_guard lock(mu_);
    entries_.push_back({std::move(operation), std::move(argument_digest)});
  }

  void Merge(const QueryLog& other) {
    auto copy = other.Entries();
    std::lock_guard lock(mu_);
    entries_.insert(entries_.end(), copy.begin(), copy.end());
  }

  size_t count() const {
    std::lock_guard lock(mu_);
    return entries_.size();
  }

  std::vector<QueryLogEntry> Entries() const {
    std::lock_guard lock(mu_);
    return entries_;
  }

 private:
  mutable std::mutex mu_;
  std::vector<QueryLogEntry> entries_;
};

}  // namespace deanon

#endif  // DEANON_PLATFORM_QUERY_LOG_HPP_
