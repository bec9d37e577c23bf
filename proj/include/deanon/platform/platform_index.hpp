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

#ifndef DEANON_PLATFORM_PLATFORM_INDEX_HPP_
#define DEANON_PLATFORM_PLATFORM_INDEX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "deanon/core/dataset.hpp"
#include "deanon/core/term_stats.hpp"
#include "deanon/error.hpp"

namespace deanon {

struct Posting {
  UserId user;
  uint32_t tf;

  friend bool operator==(const Posting&, const Posting&) = default;
};

struct SearchHit {
  UserId user;
  double score;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// Descending score, then ascending user id.
inline bool HitBefore(const SearchHit& a, const SearchHit& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.user < b.user;
}

// Immutable snapshot of the public platform: the friendship graph, every
// profile's posts, and a user-level inverted index for keyword search.
//
// The index owns copies of everything it serves; it holds no reference to the
// dataset it was built from.
class PlatformIndex {
 public:
  PlatformIndex() = default;

  explicit PlatformIndex(const Dataset& public_data)
      : graph_(public_data.graph()),
        posts_(public_data.posts()),
        corpus_(PerUserFrequencies(posts_)) {
    for (const auto& [user, list] : posts_) {
      std::map<std::string, uint32_t> tf;
      size_t tokens = 0;
      for (const Post& p : list) {
        for (const std::string& t : p.tokens()) ++tf[t];
        tokens += p.tokens().size();
      }
      token_counts_.emplace(user, tokens);
      // Users are visited in ascending order, so postings stay sorted.
      for (const auto& [term, count] : tf) inverted_[term].push_back({user, count});
    }
  }

  bool HasUser(const UserId& u) const { return graph_.HasVertex(u); }
  size_t UserCount() const { return graph_.VertexCount(); }

  // Postings for `term` sorted by user id; empty for unknown terms.
  std::span<const Posting> Postings(const std::string& term) const {
    auto it = inverted_.find(term);
    if (it == inverted_.end()) return {};
    return it->second;
  }

  // User-level document frequencies: N counts users with at least one post.
  const DocumentFrequencies& corpus() const { return corpus_; }

  size_t TokenCount(const UserId& u) const {
    auto it = token_counts_.find(u);
    return it == token_counts_.end() ? 0 : it->second;
  }

  const std::set<UserId>& Neighbors(const UserId& u) const {
    RequireUser(u);
    return graph_.Neighbors(u);
  }

  std::span<const Post> Posts(const UserId& u) const {
    RequireUser(u);
    auto it = posts_.find(u);
    if (it == posts_.end()) return {};
    return it->second;
  }

  // Keyword search. score(u) = sum over distinct query terms of
  // tf(term, u) * idf(term), accumulated in ascending term order. Users with
  // score 0 are dropped; at most `limit` hits, best first.
  std::vector<SearchHit> Search(std::span<const std::string> query,
                                size_t limit) const {
    if (limit < 1) throw Error("platform", "search limit must be >= 1");
    std::vector<std::string> terms(query.begin(), query.end());
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());

    std::unordered_map<UserId, double> scores;
    for (const std::string& term : terms) {
      const double idf = corpus_.Idf(term);
      for (const Posting& p : Postings(term)) {
        scores[p.user] += static_cast<double>(p.tf) * idf;
      }
    }
    std::vector<SearchHit> hits;
    hits.reserve(scores.size());
    for (const auto& [user, score] : scores) {
      if (score > 0.0) hits.push_back({user, score});
    }
    const size_t keep = std::min(limit, hits.size());
    std::partial_sort(hits.begin(), hits.begin() + keep, hits.end(), HitBefore);
    hits.erase(hits.begin() + keep, hits.end());
    return hits;
  }

 private:
  void RequireUser(const UserId& u) const {
    if (!graph_.HasVertex(u)) {
      throw NotFoundError("platform", "no such profile '" + u.str() + "'");
    }
  }

  Graph graph_;
  PostsByUser posts_;
  DocumentFrequencies corpus_;
  std::unordered_map<std::string, std::vector<Posting>> inverted_;
  std::map<UserId, size_t> token_counts_;
};

}  // namespace deanon

#endif  // DEANON_PLATFORM_PLATFORM_INDEX_HPP_
