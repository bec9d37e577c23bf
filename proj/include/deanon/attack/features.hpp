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

// Per-user feature profiles and the similarity used to rank candidates.
//
// A profile has four parts:
//   text                L2-normalized tf-idf of the user's posts
//   structure           L1-normalized histogram of the neighbors' degrees
//   neighbor_text       L2-normalized sum of the neighbors' text vectors
//   neighbor_structure  L1-normalized histogram of 2-hop degrees
// All entries are non-negative, so every cosine lies in [0, 1].

#ifndef DEANON_ATTACK_FEATURES_HPP_
#define DEANON_ATTACK_FEATURES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deanon/attack/attack_config.hpp"
#include "deanon/core/post.hpp"
#include "deanon/core/term_stats.hpp"
#include "deanon/core/user_id.hpp"

namespace deanon {

// Sparse vector sorted by term.
using SparseVector = std::vector<std::pair<std::string, double>>;

struct FeatureProfile {
  SparseVector text;
  std::vector<double> structure;
  SparseVector neighbor_text;
  std::vector<double> neighbor_structure;

  friend bool operator==(const FeatureProfile&, const FeatureProfile&) = default;
};

namespace internal {

inline void L2Normalize(SparseVector& v) {
  double sq = 0.0;
  for (const auto& [_, w] : v) sq += w * w;
  if (sq <= 0.0) {
    v.clear();
    return;
  }
  const double norm = std::sqrt(sq);
  for (auto& [_, w] : v) w /= norm;
}

}  // namespace internal

// L2-normalized tf-idf vector of the concatenation of `posts`. Terms with
// zero weight are omitted; a user with no weighted terms gets the empty
// (all-zero) vector.
inline SparseVector TextVector(std::span<const Post> posts,
                               const DocumentFrequencies& idf) {
  std::unordered_map<std::string_view, size_t> tf;
  for (const Post& p : posts) {
    for (const std::string& t : p.tokens()) ++tf[t];
  }
  SparseVector v;
  v.reserve(tf.size());
  for (const auto& [term, count] : tf) {
    const double w = static_cast<double>(count) * idf.Idf(term);
    if (w > 0.0) v.emplace_back(std::string(term), w);
  }
  std::sort(v.begin(), v.end());
  internal::L2Normalize(v);
  return v;
}

// L2-normalized sum of vectors, accumulated in the given order.
inline SparseVector SumNormalized(std::span<const SparseVector* const> parts) {
  std::unordered_map<std::string_view, double> acc;
  for (const SparseVector* part : parts) {
    for (const auto& [term, w] : *part) acc[term] += w;
  }
  std::vector<std::pair<std::string_view, double>> sorted(acc.begin(), acc.end());
  std::sort(sorted.begin(), sorted.end());
  SparseVector v;
  v.reserve(sorted.size());
  for (const auto& [term, w] : sorted) v.emplace_back(std::string(term), w);
  internal::L2Normalize(v);
  return v;
}

// L1-normalized bucket counts; all zero for an empty list.
inline std::vector<double> DegreeHistogram(std::span<const size_t> degrees,
                                           const DegreeBuckets& buckets) {
  std::vector<double> h(buckets.size(), 0.0);
  if (degrees.empty()) return h;
  for (size_t d : degrees) h[buckets.Index(d)] += 1.0;
  const double n = static_cast<double>(degrees.size());
  for (double& x : h) x /= n;
  return h;
}

// Builds a profile from already-computed neighbor text vectors.
inline FeatureProfile AssembleProfile(
    SparseVector text, std::span<const SparseVector* const> neighbor_texts,
    std::span<const size_t> neighbor_degrees,
    std::span<const size_t> two_hop_degrees, const DegreeBuckets& buckets) {
  FeatureProfile p;
  p.text = std::move(text);
  p.structure = DegreeHistogram(neighbor_degrees, buckets);
  p.neighbor_text = SumNormalized(neighbor_texts);
  p.neighbor_structure = DegreeHistogram(two_hop_degrees, buckets);
  return p;
}

// Raw material for one user's profile.
struct ProfileInputs {
  std::span<const Post> posts;
  std::vector<UserId> neighbors;
  std::map<UserId, std::vector<Post>> neighbor_posts;
  std::map<UserId, size_t> neighbor_degrees;
  // Degrees of the neighbors' other neighbors, one entry per 2-hop walk.
  std::vector<size_t> two_hop_degrees;
};

inline FeatureProfile BuildFeatureProfile(const ProfileInputs& in,
                                          const DocumentFrequencies& idf,
                                          const DegreeBuckets& buckets) {
  std::vector<SparseVector> nbr_text;
  std::vector<size_t> nbr_degree;
  nbr_text.reserve(in.neighbors.size());
  for (const UserId& v : in.neighbors) {
    auto posts = in.neighbor_posts.find(v);
    nbr_text.push_back(posts == in.neighbor_posts.end()
                           ? SparseVector{}
                           : TextVector(posts->second, idf));
    auto deg = in.neighbor_degrees.find(v);
    nbr_degree.push_back(deg == in.neighbor_degrees.end() ? 0 : deg->second);
  }
  std::vector<const SparseVector*> parts;
  for (const auto& v : nbr_text) parts.push_back(&v);
  return AssembleProfile(TextVector(in.posts, idf), parts, nbr_degree,
                         in.two_hop_degrees, buckets);
}

inline double Cosine(const SparseVector& a, const SparseVector& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [_, w] : a) na += w * w;
  for (const auto& [_, w] : b) nb += w * w;
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      dot += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

inline double Cosine(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) dot += a[i] * b[i];
  for (double x : a) na += x * x;
  for (double x : b) nb += x * x;
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

// Per-component cosine similarities, in FeatureWeights order.
struct ComponentSimilarity {
  double text = 0.0;
  double structure = 0.0;
  double neighbor_text = 0.0;
  double neighbor_structure = 0.0;
};

inline ComponentSimilarity CompareProfiles(const FeatureProfile& a,
                                           const FeatureProfile& b) {
  return {Cosine(a.text, b.text), Cosine(a.structure, b.structure),
          Cosine(a.neighbor_text, b.neighbor_text),
          Cosine(a.neighbor_structure, b.neighbor_structure)};
}

inline double CombineSimilarity(const ComponentSimilarity& s,
                                const FeatureWeights& w) {
  const double score = w.text * s.text + w.structure * s.structure +
                       w.neighbor_text * s.neighbor_text +
                       w.neighbor_structure * s.neighbor_structure;
  return std::clamp(score, 0.0, 1.0);
}

// Weighted similarity in [0, 1]; symmetric in its profile arguments.
inline double ScoreCandidate(const FeatureProfile& target,
                             const FeatureProfile& candidate,
                             const FeatureWeights& weights) {
  return CombineSimilarity(CompareProfiles(target, candidate), weights);
}

}  // namespace deanon

#endif  // DEANON_ATTACK_FEATURES_HPP_
