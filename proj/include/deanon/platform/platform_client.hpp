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

#ifndef DEANON_PLATFORM_PLATFORM_CLIENT_HPP_
#define DEANON_PLATFORM_PLATFORM_CLIENT_HPP_

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deanon/core/post.hpp"
#include "deanon/core/term_stats.hpp"
#include "deanon/digest.hpp"
#include "deanon/platform/platform_index.hpp"
#include "deanon/platform/query_log.hpp"

namespace deanon {

// The query surface an adversary gets. The attack is written against this
// concept rather than a concrete class so tests can interpose instrumented
// clients.
template <typename P>
concept PlatformApi =
    requires(P& p, const UserId& u, std::span<const std::string> query,
             size_t limit) {
      { p.Search(query, limit) } -> std::same_as<std::vector<SearchHit>>;
      { p.GetNeighbors(u) } -> std::same_as<std::vector<UserId>>;
      { p.GetPosts(u) } -> std::same_as<std::span<const Post>>;
      { p.GetDegree(u) } -> std::same_as<size_t>;
      { p.GetCorpusStats() } -> std::same_as<const DocumentFrequencies&>;
      { p.queries() } -> std::same_as<size_t>;
    };

// One adversary's connection to the platform. Every call is appended to the
// client's QueryLog; an optional budget caps the number of calls.
class PlatformClient {
 public:
  PlatformClient(const PlatformIndex& index, QueryLog& log,
                 std::optional<size_t> budget = std::nullopt)
      : index_(&index), log_(&log), budget_(budget) {}

  std::vector<SearchHit> Search(std::span<const std::string> query,
                                size_t limit) {
    Fnv1a digest;
    for (const std::string& t : query) digest.Field(t);
    digest.Field(std::to_string(limit));
    Record("search", digest.Hex());
    return index_->Search(query, limit);
  }

  // Sorted neighbor list. Unknown users raise NotFoundError, which is
  // distinct from an empty list.
  std::vector<UserId> GetNeighbors(const UserId& u) {
    Record("get_neighbors", DigestHex(u.str()));
    const auto& nbrs = index_->Neighbors(u);
    return {nbrs.begin(), nbrs.end()};
  }

  std::span<const Post> GetPosts(const UserId& u) {
    Record("get_posts", DigestHex(u.str()));
    return index_->Posts(u);
  }

  // Profile friend count.
  size_t GetDegree(const UserId& u) {
    Record("get_degree", DigestHex(u.str()));
    return index_->Neighbors(u).size();
  }

  // Corpus-wide statistics behind the search ranking.
  const DocumentFrequencies& GetCorpusStats() {
    Record("get_corpus_stats", DigestHex(""));
    return index_->corpus();
  }

  size_t queries() const { return issued_; }
  const QueryLog& log() const { return *log_; }

 private:
  void Record(const char* op, std::string digest) {
    if (budget_ && issued_ >= *budget_) {
      throw QueryBudgetExceeded("platform", "query budget of " +
                                                std::to_string(*budget_) +
                                                " calls exhausted");
    }
    ++issued_;
    log_->Append(op, std::move(digest));
  }

  const PlatformIndex* index_;
  QueryLog* log_;
  std::optional<size_t> budget_;
  size_t issued_ = 0;
};

static_assert(PlatformApi<PlatformClient>);

}  // namespace deanon

#endif  // DEANON_PLATFORM_PLATFORM_CLIENT_HPP_
