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

// Synthetic public platform with correlated text and structure.
//
// The graph grows by preferential attachment from a clique of
// `edges_per_new_vertex` seed vertices. Every user belongs to a community; a
// new user joins the community of one of the users it links to with
// probability 0.7, otherwise a uniformly random one. Each post token is a
// personal term (one of ten unique to the author) with probability
// `personal_term_prob`; otherwise it comes from the author's community
// vocabulary (70%) or the shared vocabulary (30%), both Zipf-distributed.

#ifndef DEANON_HARNESS_SYNTHETIC_HPP_
#define DEANON_HARNESS_SYNTHETIC_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "deanon/core/dataset.hpp"
#include "deanon/error.hpp"
#include "deanon/random.hpp"

namespace deanon {

inline constexpr size_t kPersonalVocabulary = 10;
inline constexpr double kCommunityHomophily = 0.7;
inline constexpr double kCommunityTermShare = 0.7;

struct SynthConfig {
  size_t n_users = 500;
  size_t edges_per_new_vertex = 4;
  size_t posts_per_user = 20;
  size_t tokens_per_post = 12;
  size_t vocab_shared = 2000;
  size_t vocab_per_community = 200;
  size_t n_communities = 10;
  double personal_term_prob = 0.3;
  uint64_t seed = 7;

  void Validate() const {
    auto positive = [](size_t v, const char* name) {
      if (v < 1) throw Error("eval-harness", std::string(name) + " must be >= 1");
    };
    positive(n_users, "n_users");
    positive(edges_per_new_vertex, "edges_per_new_vertex");
    positive(posts_per_user, "posts_per_user");
    positive(tokens_per_post, "tokens_per_post");
    positive(vocab_shared, "vocab_shared");
    positive(vocab_per_community, "vocab_per_community");
    positive(n_communities, "n_communities");
    if (!(personal_term_prob >= 0.0 && personal_term_prob <= 1.0)) {
      throw Error("eval-harness", "personal_term_prob must lie in [0, 1]");
    }
    if (edges_per_new_vertex >= n_users) {
      throw Error("eval-harness", "edges_per_new_vertex (" +
                                      std::to_string(edges_per_new_vertex) +
                                      ") must be below n_users (" +
                                      std::to_string(n_users) + ")");
    }
  }
};

namespace internal {

// Zipf(1) sampler over ranks [0, n).
class ZipfSampler {
 public:
  explicit ZipfSampler(size_t n) : cdf_(n) {
    double acc = 0.0;
    for (size_t r = 0; r < n; ++r) {
      acc += 1.0 / static_cast<double>(r + 1);
      cdf_[r] = acc;
    }
    for (double& c : cdf_) c /= acc;
  }

  size_t Sample(Rng& rng) const {
    const double u = rng.UniformReal();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return std::min<size_t>(it - cdf_.begin(), cdf_.size() - 1);
  }

 private:
  std::vector<double> cdf_;
};

inline std::string Format(const char* fmt, size_t a, size_t b) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

}  // namespace internal

inline std::string SyntheticUserName(size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "user%05zu", index);
  return buf;
}

// Personal term j of user `index`; no other user ever emits it.
inline std::string PersonalTerm(size_t index, size_t j) {
  return internal::Format("pers%zux%zu", index, j);
}

// Returns the public platform dataset, labelled "public".
inline Dataset GenerateSynthetic(const SynthConfig& config) {
  config.Validate();
  const size_t n = config.n_users;
  const size_t m = config.edges_per_new_vertex;

  std::vector<UserId> ids;
  ids.reserve(n);
  for (size_t i = 0; i < n; ++i) ids.emplace_back(SyntheticUserName(i));

  Dataset data("public");
  for (const UserId& u : ids) data.AddUser(u);

  // Graph. `ends` lists every edge endpoint, so a uniform pick from it is a
  // degree-proportional pick of a vertex.
  Rng graph_rng(DeriveSeed(config.seed, "synth/graph"));
  std::vector<size_t> ends;
  std::vector<std::vector<size_t>> attached(n);
  for (size_t a = 0; a < m; ++a) {
    for (size_t b = a + 1; b < m; ++b) {
      data.AddEdge(ids[a], ids[b]);
      ends.push_back(a);
      ends.push_back(b);
    }
  }
  for (size_t v = m; v < n; ++v) {
    std::vector<size_t>& chosen = attached[v];
    while (chosen.size() < m) {
      const size_t pick = ends.empty() ? graph_rng.UniformIndex(v)
                                       : ends[graph_rng.UniformIndex(ends.size())];
      if (std::find(chosen.begin(), chosen.end(), pick) == chosen.end()) {
        chosen.push_back(pick);
      }
    }
    for (size_t t : chosen) {
      data.AddEdge(ids[v], ids[t]);
      ends.push_back(v);
      ends.push_back(t);
    }
  }

  // Communities, correlated with the attachment choices.
  Rng community_rng(DeriveSeed(config.seed, "synth/community"));
  std::vector<size_t> community(n);
  for (size_t v = 0; v < n; ++v) {
    if (v >= m && community_rng.Bernoulli(kCommunityHomophily)) {
      const auto& chosen = attached[v];
      community[v] = community[chosen[community_rng.UniformIndex(chosen.size())]];
    } else {
      community[v] = community_rng.UniformIndex(config.n_communities);
    }
  }

  // Posts.
  Rng text_rng(DeriveSeed(config.seed, "synth/posts"));
  const internal::ZipfSampler shared(config.vocab_shared);
  const internal::ZipfSampler local(config.vocab_per_community);
  for (size_t v = 0; v < n; ++v) {
    for (size_t j = 0; j < config.posts_per_user; ++j) {
      std::string text;
      for (size_t t = 0; t < config.tokens_per_post; ++t) {
        if (t) text.push_back(' ');
        if (text_rng.Bernoulli(config.personal_term_prob)) {
          text += PersonalTerm(v, text_rng.UniformIndex(kPersonalVocabulary));
        } else if (text_rng.Bernoulli(kCommunityTermShare)) {
          text += internal::Format("c%zuw%zu", community[v], local.Sample(text_rng));
        } else {
          text += "w" + std::to_string(shared.Sample(text_rng));
        }
      }
      data.AddPost(Post(ids[v].str() + "-p" + std::to_string(j), ids[v], text));
    }
  }
  return data;
}

}  // namespace deanon

#endif  // DEANON_HARNESS_SYNTHETIC_HPP_
