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

// Shared fixtures and brute-force oracles for the tests.
//
// The oracles deliberately avoid the library's statistics code: they work on
// raw token lists with plain loops so a bug in the library cannot hide in both.

#ifndef DEANON_TESTS_TEST_SUPPORT_HPP_
#define DEANON_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include "deanon/deanon.hpp"

namespace deanon::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("deanon_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void WriteText(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::string ReadText(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline UserId U(const std::string& s) { return UserId(s); }

// {d1:"apple banana", d2:"apple cherry", d3:"banana banana"}, one author each.
inline Dataset FruitCorpus() {
  Dataset d("fruit");
  d.AddPost(Post("d1", U("u1"), "apple banana"));
  d.AddPost(Post("d2", U("u2"), "apple cherry"));
  d.AddPost(Post("d3", U("u3"), "banana banana"));
  return d;
}

inline Graph Star(size_t leaves) {
  Graph g;
  for (size_t i = 1; i <= leaves; ++i) g.AddEdge(U("c"), U("l" + std::to_string(i)));
  return g;
}

inline Graph RandomGraph(size_t n, double p, uint64_t seed) {
  Rng rng(seed);
  Graph g;
  for (size_t i = 0; i < n; ++i) g.AddVertex(U("v" + std::to_string(i)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (rng.Bernoulli(p)) g.AddEdge(U("v" + std::to_string(i)), U("v" + std::to_string(j)));
    }
  }
  return g;
}

// Graph with exactly `edges` random edges on `n` vertices.
inline Graph RandomGraphWithEdges(size_t n, size_t edges, uint64_t seed) {
  Rng rng(seed);
  Graph g;
  for (size_t i = 0; i < n; ++i) g.AddVertex(U("v" + std::to_string(i)));
  while (g.EdgeCount() < edges) {
    const size_t a = rng.UniformIndex(n), b = rng.UniformIndex(n);
    if (a != b) g.AddEdge(U("v" + std::to_string(a)), U("v" + std::to_string(b)));
  }
  return g;
}

// Up to `max_posts` short posts by up to 8 users over a 12-word vocabulary,
// plus a random friendship graph.
inline Dataset RandomCorpus(uint64_t seed, size_t max_posts = 50) {
  Rng rng(seed);
  static const char* kWords[] = {"alpha", "beta",  "gamma", "delta",   "eps",  "zeta",
                                 "eta",   "theta", "iota",  "kappa",  "lam",  "mu"};
  const size_t users = 2 + rng.UniformIndex(7);
  const size_t posts = 1 + rng.UniformIndex(max_posts);
  Dataset d("random");
  for (size_t u = 0; u < users; ++u) d.AddUser(U("u" + std::to_string(u)));
  for (size_t i = 0; i < posts; ++i) {
    std::string text;
    const size_t len = rng.UniformIndex(7);  // may be empty
    for (size_t t = 0; t < len; ++t) {
      if (t) text += ' ';
      text += kWords[rng.UniformIndex(12)];
    }
    d.AddPost(Post("p" + std::to_string(i), U("u" + std::to_string(rng.UniformIndex(users))),
                   text));
  }
  for (size_t a = 0; a < users; ++a) {
    for (size_t b = a + 1; b < users; ++b) {
      if (rng.Bernoulli(0.3)) d.AddEdge(U("u" + std::to_string(a)), U("u" + std::to_string(b)));
    }
  }
  return d;
}

// ---- brute-force oracles --------------------------------------------------

inline std::vector<std::vector<std::string>> AllPostTokens(const Dataset& d) {
  std::vector<std::vector<std::string>> out;
  for (const auto& [_, list] : d.posts()) {
    for (const Post& p : list) out.push_back(p.tokens());
  }
  return out;
}

inline bool ContainsToken(const std::vector<std::string>& doc, const std::string& t) {
  return std::find(doc.begin(), doc.end(), t) != doc.end();
}

inline double OracleIdf(const std::vector<std::vector<std::string>>& docs,
                        const std::string& term) {
  size_t df = 0;
  for (const auto& doc : docs) df += ContainsToken(doc, term) ? 1 : 0;
  if (df == 0) return 0.0;
  return std::log(static_cast<double>(docs.size()) / static_cast<double>(df));
}

// Mean tf-idf of one post with post-level documents.
inline double OraclePostScore(const Post& post, const Dataset& corpus) {
  const auto docs = AllPostTokens(corpus);
  if (post.tokens().empty()) return 0.0;
  std::set<std::string> distinct(post.tokens().begin(), post.tokens().end());
  double sum = 0.0;
  for (const std::string& t : distinct) {
    const double tf = static_cast<double>(std::count(post.tokens().begin(), post.tokens().end(), t));
    sum += tf * OracleIdf(docs, t);
  }
  return sum / static_cast<double>(post.tokens().size());
}

// Concatenated tokens of every user with at least one post.
inline std::map<UserId, std::vector<std::string>> UserDocuments(const Dataset& d) {
  std::map<UserId, std::vector<std::string>> out;
  for (const auto& [u, list] : d.posts()) {
    if (list.empty()) continue;
    auto& doc = out[u];
    for (const Post& p : list) doc.insert(doc.end(), p.tokens().begin(), p.tokens().end());
  }
  return out;
}

// Linear-scan search: score every user, drop zeros, sort, truncate.
inline std::vector<SearchHit> OracleSearch(const Dataset& d, const std::vector<std::string>& query,
                                           size_t limit) {
  const auto users = UserDocuments(d);
  std::vector<std::vector<std::string>> docs;
  for (const auto& [_, doc] : users) docs.push_back(doc);
  std::set<std::string> terms(query.begin(), query.end());
  std::vector<SearchHit> hits;
  for (const auto& [u, doc] : users) {
    double s = 0.0;
    for (const std::string& t : terms) {
      s += static_cast<double>(std::count(doc.begin(), doc.end(), t)) * OracleIdf(docs, t);
    }
    if (s > 0.0) hits.push_back({u, s});
  }
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.user < b.user;
  });
  if (hits.size() > limit) hits.erase(hits.begin() + static_cast<std::ptrdiff_t>(limit), hits.end());
  return hits;
}

// Dense tf-idf vector over a fixed vocabulary, L2-normalized.
inline std::map<std::string, double> OracleTextVector(const std::vector<std::string>& tokens,
                                                      const std::vector<std::vector<std::string>>& docs) {
  std::map<std::string, double> v;
  for (const std::string& t : tokens) v[t] += 1.0;
  double sq = 0.0;
  for (auto& [t, w] : v) {
    w *= OracleIdf(docs, t);
    sq += w * w;
  }
  std::map<std::string, double> out;
  if (sq <= 0.0) return out;
  for (const auto& [t, w] : v) {
    if (w > 0.0) out[t] = w / std::sqrt(sq);
  }
  return out;
}

inline double OracleCosine(const std::map<std::string, double>& a,
                           const std::map<std::string, double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const auto& [t, w] : a) {
    na += w * w;
    if (auto it = b.find(t); it != b.end()) dot += w * it->second;
  }
  for (const auto& [_, w] : b) nb += w * w;
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

inline double OracleCosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

// Bucket by halving: 1 -> 0, 2 -> 1, 3..4 -> 2, 5..8 -> 3, capped at 12.
inline size_t OracleBucket(size_t d) {
  size_t b = 0, top = 1;
  while (d > top && b < 12) {
    top *= 2;
    ++b;
  }
  return b;
}

inline std::vector<double> OracleHistogram(const std::vector<size_t>& degrees) {
  std::vector<double> h(13, 0.0);
  for (size_t d : degrees) h[OracleBucket(d)] += 1.0;
  if (!degrees.empty()) {
    for (double& x : h) x /= static_cast<double>(degrees.size());
  }
  return h;
}

// Profile ingredients of one user of a dataset, computed by plain loops.
struct OracleProfile {
  std::map<std::string, double> text;
  std::vector<double> structure;
  std::map<std::string, double> neighbor_text;
  std::vector<double> neighbor_structure;
};

inline OracleProfile ComputeOracleProfile(const Dataset& d, const UserId& u) {
  const auto user_docs = UserDocuments(d);
  std::vector<std::vector<std::string>> docs;
  for (const auto& [_, doc] : user_docs) docs.push_back(doc);
  auto tokens_of = [&](const UserId& v) {
    auto it = user_docs.find(v);
    return it == user_docs.end() ? std::vector<std::string>{} : it->second;
  };
  const Graph& g = d.graph();
  OracleProfile p;
  p.text = OracleTextVector(tokens_of(u), docs);
  std::vector<size_t> degrees, two_hop;
  std::map<std::string, double> sum;
  for (const UserId& v : g.Neighbors(u)) {
    degrees.push_back(g.Neighbors(v).size());
    for (const auto& [t, w] : OracleTextVector(tokens_of(v), docs)) sum[t] += w;
    for (const UserId& w : g.Neighbors(v)) {
      if (w != u) two_hop.push_back(g.Neighbors(w).size());
    }
  }
  double sq = 0.0;
  for (const auto& [_, w] : sum) sq += w * w;
  if (sq > 0.0) {
    for (const auto& [t, w] : sum) p.neighbor_text[t] = w / std::sqrt(sq);
  }
  p.structure = OracleHistogram(degrees);
  p.neighbor_structure = OracleHistogram(two_hop);
  return p;
}

// Same profile but with the text statistics of another corpus, used when a
// release-side target is compared with platform-side profiles.
inline double OracleScore(const OracleProfile& a, const OracleProfile& b,
                          const FeatureWeights& w) {
  const double s = w.text * OracleCosine(a.text, b.text) +
                   w.structure * OracleCosine(a.structure, b.structure) +
                   w.neighbor_text * OracleCosine(a.neighbor_text, b.neighbor_text) +
                   w.neighbor_structure * OracleCosine(a.neighbor_structure, b.neighbor_structure);
  return std::clamp(s, 0.0, 1.0);
}

// Wraps a real client and counts every call by kind.
class CountingPlatform {
 public:
  explicit CountingPlatform(PlatformClient& inner) : inner_(inner) {}

  std::vector<SearchHit> Search(std::span<const std::string> q, size_t limit) {
    ++searches;
    return inner_.Search(q, limit);
  }
  std::vector<UserId> GetNeighbors(const UserId& u) {
    ++neighbor_calls;
    return inner_.GetNeighbors(u);
  }
  std::span<const Post> GetPosts(const UserId& u) {
    ++post_calls;
    return inner_.GetPosts(u);
  }
  size_t GetDegree(const UserId& u) {
    ++degree_calls;
    return inner_.GetDegree(u);
  }
  const DocumentFrequencies& GetCorpusStats() {
    ++stats_calls;
    return inner_.GetCorpusStats();
  }
  size_t queries() const { return inner_.queries(); }

  size_t total() const { return searches + neighbor_calls + post_calls + degree_calls + stats_calls; }

  size_t searches = 0, neighbor_calls = 0, post_calls = 0, degree_calls = 0, stats_calls = 0;

 private:
  PlatformClient& inner_;
};

static_assert(PlatformApi<CountingPlatform>);

// Small synthetic configuration used across the harness tests.
inline SynthConfig SmallSynth(size_t users, uint64_t seed) {
  SynthConfig c;
  c.n_users = users;
  c.posts_per_user = 6;
  c.tokens_per_post = 8;
  c.vocab_shared = 300;
  c.vocab_per_community = 40;
  c.n_communities = 4;
  c.seed = seed;
  return c;
}

}  // namespace deanon::testing

#endif  // DEANON_TESTS_TEST_SUPPORT_HPP_
