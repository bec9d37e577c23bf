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

// Query-only de-anonymization of one released user.
//
//   1. Rank the target's posts by mean tf-idf over the released corpus and
//      keep the top k as the most revealing ones.
//   2. Search the platform with each revealing post; the summed search scores
//      pick up to m candidate profiles.
//   3. Build a feature profile for the target from the release and for each
//      candidate from platform queries, and claim the most similar candidate.
//
// The attack sees the released dataset, its configuration, and whatever a
// PlatformApi returns. It never sees the public dataset or the ground truth;
// this header must not include deanon/core/ground_truth.hpp.

#ifndef DEANON_ATTACK_ATTACK_HPP_
#define DEANON_ATTACK_ATTACK_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "deanon/attack/attack_config.hpp"
#include "deanon/attack/features.hpp"
#include "deanon/core/dataset.hpp"
#include "deanon/core/term_stats.hpp"
#include "deanon/error.hpp"
#include "deanon/platform/platform_client.hpp"

namespace deanon {

struct RankedCandidate {
  UserId user;
  double score;

  friend bool operator==(const RankedCandidate&, const RankedCandidate&) = default;
};

struct MappingResult {
  UserId target;
  std::optional<UserId> claimed;  // best candidate, absent if none
  double score = 0.0;
  std::vector<RankedCandidate> ranked_candidates;  // best first
  size_t queries_used = 0;

  friend bool operator==(const MappingResult&, const MappingResult&) = default;
};

// Mean tf-idf of a post: sum over its distinct terms of tf * idf, divided by
// its token count. Empty posts score 0.
inline double RevealingScore(const Post& post, const DocumentFrequencies& idf) {
  if (post.tokens().empty()) return 0.0;
  std::map<std::string_view, size_t> tf;
  for (const std::string& t : post.tokens()) ++tf[t];
  double sum = 0.0;
  for (const auto& [term, count] : tf) {
    sum += static_cast<double>(count) * idf.Idf(term);
  }
  return sum / static_cast<double>(post.tokens().size());
}

// Top-k posts by RevealingScore, ties by ascending post id. `post_idf` must
// treat each post of the released corpus as one document.
inline std::vector<Post> ExtractRevealingPosts(std::span<const Post> posts,
                                               const DocumentFrequencies& post_idf,
                                               size_t k) {
  if (k < 1) throw Error("attack", "k must be >= 1");
  std::vector<std::pair<double, const Post*>> scored;
  scored.reserve(posts.size());
  for (const Post& p : posts) scored.emplace_back(RevealingScore(p, post_idf), &p);
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second->post_id() < b.second->post_id();
  });
  std::vector<Post> out;
  for (size_t i = 0; i < scored.size() && i < k; ++i) out.push_back(*scored[i].second);
  return out;
}

// Convenience overload computing the per-post idf from the whole corpus.
inline std::vector<Post> ExtractRevealingPosts(std::span<const Post> posts,
                                               const PostsByUser& corpus,
                                               size_t k) {
  return ExtractRevealingPosts(posts, PerPostFrequencies(corpus), k);
}

// One search per revealing post (query = its token list, limit = m); hits are
// merged by summing scores in post order and the best m users kept, ties by
// ascending id.
template <PlatformApi Platform>
std::vector<SearchHit> SelectCandidates(Platform& platform,
                                        std::span<const Post> revealing,
                                        size_t m) {
  if (m < 1) throw Error("attack", "candidate limit must be >= 1");
  std::map<UserId, double> merged;
  for (const Post& p : revealing) {
    for (const SearchHit& hit : platform.Search(p.tokens(), m)) {
      merged[hit.user] += hit.score;
    }
  }
  std::vector<SearchHit> out;
  out.reserve(merged.size());
  for (auto& [user, score] : merged) out.push_back({user, score});
  std::sort(out.begin(), out.end(), HitBefore);
  if (out.size() > m) out.erase(out.begin() + static_cast<std::ptrdiff_t>(m), out.end());
  return out;
}

// Features derived from platform responses, shared by the attacks that run
// against one platform. An entry depends only on what the platform returns
// for a user, so sharing is valid while the platform does not change. The
// queries are still issued by every attack that needs them; only the
// arithmetic is reused, so query counts do not depend on attack order.
class PlatformFeatureCache {
 public:
  template <class Compute>
  const SparseVector& Text(const UserId& u, Compute&& compute) {
    return Lookup(text_, u, std::forward<Compute>(compute));
  }

  template <class Compute>
  const SparseVector& NeighborText(const UserId& u, Compute&& compute) {
    return Lookup(neighbor_text_, u, std::forward<Compute>(compute));
  }

 private:
  using Table = std::unordered_map<UserId, SparseVector>;

  // Node references stay valid across rehashing, so the returned reference
  // may be used without the lock.
  template <class Compute>
  const SparseVector& Lookup(Table& table, const UserId& u, Compute&& compute) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table.find(u); it != table.end()) return it->second;
    }
    SparseVector v = compute();
    std::lock_guard lock(mu_);
    return table.try_emplace(u, std::move(v)).first->second;
  }

  std::mutex mu_;
  Table text_;
  Table neighbor_text_;
};

namespace internal {

// Per-target cache over platform responses so one attack run never asks for
// the same thing twice. Lives for a single MapUser call.
template <PlatformApi Platform>
class CandidateFetcher {
 public:
  CandidateFetcher(Platform& platform, const DegreeBuckets& buckets,
                   PlatformFeatureCache* shared)
      : platform_(platform), buckets_(buckets), shared_(shared) {}

  FeatureProfile Profile(const UserId& c) {
    if (idf_ == nullptr) idf_ = &platform_.GetCorpusStats();
    const std::vector<UserId> nbrs = Neighbors(c);
    const SparseVector* own_text = &Text(c);
    std::vector<const SparseVector*> nbr_text;
    std::vector<size_t> nbr_degree;
    std::vector<size_t> two_hop;
    for (const UserId& v : nbrs) {
      nbr_text.push_back(&Text(v));
      const std::vector<UserId>& second = Neighbors(v);
      nbr_degree.push_back(second.size());
      for (const UserId& w : second) {
        if (w != c) two_hop.push_back(Degree(w));
      }
    }
    if (shared_ == nullptr) {
      return AssembleProfile(*own_text, nbr_text, nbr_degree, two_hop, buckets_);
    }
    FeatureProfile p;
    p.text = *own_text;
    p.structure = DegreeHistogram(nbr_degree, buckets_);
    p.neighbor_text = shared_->NeighborText(c, [&] { return SumNormalized(nbr_text); });
    p.neighbor_structure = DegreeHistogram(two_hop, buckets_);
    return p;
  }

 private:
  const std::vector<UserId>& Neighbors(const UserId& u) {
    auto it = neighbors_.find(u);
    if (it == neighbors_.end()) {
      it = neighbors_.emplace(u, platform_.GetNeighbors(u)).first;
    }
    return it->second;
  }

  size_t Degree(const UserId& u) {
    if (auto it = neighbors_.find(u); it != neighbors_.end()) return it->second.size();
    auto it = degree_.find(u);
    if (it == degree_.end()) it = degree_.emplace(u, platform_.GetDegree(u)).first;
    return it->second;
  }

  const SparseVector& Text(const UserId& u) {
    auto it = text_.find(u);
    if (it != text_.end()) return *it->second;
    const std::span<const Post> posts = platform_.GetPosts(u);
    const SparseVector* v;
    if (shared_ != nullptr) {
      v = &shared_->Text(u, [&] { return TextVector(posts, *idf_); });
    } else {
      owned_.push_back(TextVector(posts, *idf_));
      v = &owned_.back();
    }
    text_.emplace(u, v);
    return *v;
  }

  Platform& platform_;
  const DegreeBuckets& buckets_;
  PlatformFeatureCache* shared_;
  const DocumentFrequencies* idf_ = nullptr;
  std::unordered_map<UserId, std::vector<UserId>> neighbors_;
  std::unordered_map<UserId, size_t> degree_;
  std::unordered_map<UserId, const SparseVector*> text_;
  std::deque<SparseVector> owned_;
};

}  // namespace internal

// Attack state tied to one released dataset. Corpus statistics of the
// release are computed once here and shared by every MapUser call, which
// makes concurrent MapUser calls on distinct platform clients safe.
//
// The dataset must outlive the Attacker.
class Attacker {
 public:
  Attacker(const Dataset& release, AttackConfig config)
      : release_(&release),
        config_(std::move(config)),
        post_idf_(PerPostFrequencies(release.posts())),
        user_idf_(PerUserFrequencies(release.posts())) {
    config_.Validate();
    for (const UserId& u : release.graph().Vertices()) {
      release_text_.emplace(u, TextVector(release.PostsOf(u), user_idf_));
    }
  }

  const AttackConfig& config() const { return config_; }
  const DocumentFrequencies& post_idf() const { return post_idf_; }
  const DocumentFrequencies& user_idf() const { return user_idf_; }

  // Profile of a released user, computed from the release alone.
  FeatureProfile TargetProfile(const UserId& target) const {
    const Graph& g = release_->graph();
    std::vector<const SparseVector*> nbr_text;
    std::vector<size_t> nbr_degree;
    std::vector<size_t> two_hop;
    for (const UserId& v : g.Neighbors(target)) {
      nbr_text.push_back(&release_text_.at(v));
      nbr_degree.push_back(g.Degree(v));
      for (const UserId& w : g.Neighbors(v)) {
        if (w != target) two_hop.push_back(g.Degree(w));
      }
    }
    return AssembleProfile(release_text_.at(target), nbr_text, nbr_degree, two_hop,
                           config_.buckets);
  }

  // `shared` may carry derived platform features across calls against the
  // same, unchanging platform; it never changes the result.
  template <PlatformApi Platform>
  MappingResult MapUser(const UserId& target, Platform& platform,
                        PlatformFeatureCache* shared = nullptr) const {
    if (!release_->graph().HasVertex(target)) {
      throw NotFoundError("attack", "target '" + target.str() +
                                        "' is not in the released dataset");
    }
    MappingResult result{target, std::nullopt, 0.0, {}, 0};
    const size_t start = platform.queries();

    const std::vector<Post> revealing = ExtractRevealingPosts(
        release_->PostsOf(target), post_idf_, config_.top_k_posts);
    std::vector<SearchHit> candidates;
    try {
      candidates = SelectCandidates(platform, revealing, config_.candidate_limit);
    } catch (const QueryBudgetExceeded&) {
      candidates.clear();
    }

    if (!candidates.empty()) {
      const FeatureProfile mine = TargetProfile(target);
      internal::CandidateFetcher<Platform> fetcher(platform, config_.buckets, shared);
      for (const SearchHit& c : candidates) {
        try {
          const FeatureProfile theirs = fetcher.Profile(c.user);
          result.ranked_candidates.push_back(
              {c.user, ScoreCandidate(mine, theirs, config_.weights)});
        } catch (const QueryBudgetExceeded&) {
          break;  // rank whatever was fully profiled
        }
      }
      std::sort(result.ranked_candidates.begin(), result.ranked_candidates.end(),
                [](const RankedCandidate& a, const RankedCandidate& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.user < b.user;
                });
    }
    if (!result.ranked_candidates.empty()) {
      result.claimed = result.ranked_candidates.front().user;
      result.score = result.ranked_candidates.front().score;
    }
    result.queries_used = platform.queries() - start;
    return result;
  }

 private:
  const Dataset* release_;
  AttackConfig config_;
  DocumentFrequencies post_idf_;
  DocumentFrequencies user_idf_;
  std::unordered_map<UserId, SparseVector> release_text_;
};

// Single-target entry point; recomputes the release statistics on each call.
template <PlatformApi Platform>
MappingResult MapUser(const UserId& target, const Dataset& release,
                      Platform& platform, const AttackConfig& config) {
  return Attacker(release, config).MapUser(target, platform);
}

}  // namespace deanon

#endif  // DEANON_ATTACK_ATTACK_HPP_
