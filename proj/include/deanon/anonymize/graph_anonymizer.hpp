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

// Structural anonymization: random edge rewiring and k-degree anonymity by
// edge addition.

#ifndef DEANON_ANONYMIZE_GRAPH_ANONYMIZER_HPP_
#define DEANON_ANONYMIZE_GRAPH_ANONYMIZER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deanon/core/graph.hpp"
#include "deanon/error.hpp"
#include "deanon/numeric.hpp"
#include "deanon/random.hpp"

namespace deanon {

enum class GraphTechnique { kEdgePerturbation, kKDegree };

inline std::string_view GraphTechniqueName(GraphTechnique t) {
  return t == GraphTechnique::kEdgePerturbation ? "edge_perturbation"
                                                : "k_degree";
}

inline GraphTechnique ParseGraphTechnique(std::string_view name) {
  if (name == "edge_perturbation") return GraphTechnique::kEdgePerturbation;
  if (name == "k_degree") return GraphTechnique::kKDegree;
  throw Error("anonymize-graph",
              "unknown graph technique '" + std::string(name) + "'");
}

struct GraphAnonConfig {
  GraphTechnique technique = GraphTechnique::kEdgePerturbation;
  double fraction = 0.2;  // edge_perturbation only
  size_t k = 5;           // k_degree only
  uint64_t seed = 0;

  void Validate() const {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
      throw Error("anonymize-graph", "fraction must lie in [0, 1]");
    }
    if (k < 1) throw Error("anonymize-graph", "k must be >= 1");
  }
};

// Deletes round(fraction * |E|) uniformly chosen edges and inserts as many
// uniformly chosen new edges between distinct vertices that were not adjacent
// in the input. Vertex and edge counts are preserved, and exactly the deleted
// edges are missing from the output.
inline Graph PerturbEdges(const Graph& graph, double fraction, uint64_t seed) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw Error("anonymize-graph", "fraction must lie in [0, 1]");
  }
  std::vector<Edge> edges = graph.Edges();
  const size_t changes = RoundHalfUp(fraction * static_cast<double>(edges.size()));
  if (changes == 0) return graph;

  const std::vector<UserId> vertices = graph.Vertices();
  const uint64_t n = vertices.size();
  const uint64_t all_pairs = n * (n - 1) / 2;
  const uint64_t free_pairs = all_pairs - edges.size();
  if (free_pairs < changes) {
    throw Error("anonymize-graph",
                "graph too dense to rewire: need " + std::to_string(changes) +
                    " new edges but only " + std::to_string(free_pairs) +
                    " non-adjacent pairs exist (shortfall " +
                    std::to_string(changes - free_pairs) + ")");
  }

  Rng rng(seed);
  // Partial Fisher-Yates: the first `changes` slots are the deleted edges.
  for (size_t i = 0; i < changes; ++i) {
    const size_t j = i + static_cast<size_t>(rng.UniformIndex(edges.size() - i));
    std::swap(edges[i], edges[j]);
  }
  Graph out = graph;
  for (size_t i = 0; i < changes; ++i) out.RemoveEdge(edges[i].first, edges[i].second);

  if (2 * free_pairs >= all_pairs) {
    // Sparse enough for rejection sampling over ordered pairs, which is
    // uniform over unordered non-adjacent pairs.
    size_t added = 0;
    while (added < changes) {
      const auto a = rng.UniformIndex(n);
      const auto b = rng.UniformIndex(n);
      if (a == b) continue;
      const UserId& u = vertices[a];
      const UserId& v = vertices[b];
      if (graph.HasEdge(u, v) || out.HasEdge(u, v)) continue;
      out.AddEdge(u, v);
      ++added;
    }
  } else {
    std::vector<std::pair<uint32_t, uint32_t>> pool;
    pool.reserve(free_pairs);
    for (uint32_t a = 0; a < n; ++a) {
      for (uint32_t b = a + 1; b < n; ++b) {
        if (!graph.HasEdge(vertices[a], vertices[b])) pool.emplace_back(a, b);
      }
    }
    for (size_t i = 0; i < changes; ++i) {
      const size_t j = i + static_cast<size_t>(rng.UniformIndex(pool.size() - i));
      std::swap(pool[i], pool[j]);
      out.AddEdge(vertices[pool[i].first], vertices[pool[i].second]);
    }
  }
  return out;
}

// True when every degree value present occurs at least k times.
inline bool IsKDegreeAnonymous(const Graph& graph, size_t k) {
  std::map<size_t, size_t> counts;
  for (const auto& [_, nbrs] : graph.adjacency()) ++counts[nbrs.size()];
  return std::all_of(counts.begin(), counts.end(),
                     [k](const auto& kv) { return kv.second >= k; });
}

// Greedy k-degree anonymization using edge additions only.
//
// Each round sorts vertices by descending degree (seeded tie-break), cuts the
// sequence into groups of at least k vertices (equal degrees at a boundary are
// kept together, a short tail joins the previous group), and raises every
// member to its group's maximum degree by linking it to the lowest-degree
// non-neighbors. New edges shift other vertices' degrees, so rounds repeat
// until the degree sequence is k-anonymous. Every unsatisfied round adds at
// least one edge and the complete graph is k-anonymous, so this terminates.
inline Graph KDegreeAnonymize(const Graph& graph, size_t k, uint64_t seed) {
  const size_t n = graph.VertexCount();
  if (k < 1) throw Error("anonymize-graph", "k must be >= 1");
  if (k > n) {
    throw Error("anonymize-graph", "k = " + std::to_string(k) +
                                       " exceeds vertex count " +
                                       std::to_string(n));
  }
  Graph out = graph;
  if (IsKDegreeAnonymous(out, k)) return out;

  const std::vector<UserId> vertices = out.Vertices();
  std::vector<size_t> priority(n);
  {
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    Rng rng(seed);
    rng.Shuffle(perm);
    for (size_t i = 0; i < n; ++i) priority[perm[i]] = i;
  }
  std::vector<size_t> degree(n);
  for (size_t i = 0; i < n; ++i) degree[i] = out.Degree(vertices[i]);

  std::vector<size_t> order(n);
  while (!IsKDegreeAnonymous(out, k)) {
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (degree[a] != degree[b]) return degree[a] > degree[b];
      return priority[a] < priority[b];
    });

    size_t begin = 0;
    while (begin < n) {
      size_t end = std::min(begin + k, n);
      while (end < n && degree[order[end]] == degree[order[end - 1]]) ++end;
      if (n - end < k) end = n;
      const size_t target = degree[order[begin]];
      for (size_t pos = begin; pos < end; ++pos) {
        const size_t u = order[pos];
        if (degree[u] >= target) continue;
        const size_t need = target - degree[u];
        std::vector<size_t> eligible;
        for (size_t w = 0; w < n; ++w) {
          if (w != u && !out.HasEdge(vertices[u], vertices[w])) {
            eligible.push_back(w);
          }
        }
        if (eligible.size() < need) {
          throw Error("anonymize-graph",
                      "cannot raise degree of '" + vertices[u].str() + "' to " +
                          std::to_string(target) + ": only " +
                          std::to_string(eligible.size()) +
                          " eligible non-neighbors");
        }
        std::partial_sort(eligible.begin(), eligible.begin() + need,
                          eligible.end(), [&](size_t a, size_t b) {
                            if (degree[a] != degree[b]) return degree[a] < degree[b];
                            return priority[a] < priority[b];
                          });
        for (size_t i = 0; i < need; ++i) {
          out.AddEdge(vertices[u], vertices[eligible[i]]);
          ++degree[u];
          ++degree[eligible[i]];
        }
      }
      begin = end;
    }
  }
  return out;
}

inline Graph AnonymizeGraph(const Graph& graph, const GraphAnonConfig& config) {
  config.Validate();
  switch (config.technique) {
    case GraphTechnique::kEdgePerturbation:
      return PerturbEdges(graph, config.fraction, config.seed);
    case GraphTechnique::kKDegree:
      return KDegreeAnonymize(graph, config.k, config.seed);
  }
  throw Error("anonymize-graph", "unhandled technique");
}

}  // namespace deanon

#endif  // DEANON_ANONYMIZE_GRAPH_ANONYMIZER_HPP_
