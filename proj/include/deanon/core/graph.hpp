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

#ifndef DEANON_CORE_GRAPH_HPP_
#define DEANON_CORE_GRAPH_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "deanon/core/user_id.hpp"
#include "deanon/error.hpp"

namespace deanon {

// Edge with endpoints in ascending order.
using Edge = std::pair<UserId, UserId>;

inline Edge MakeEdge(const UserId& a, const UserId& b) {
  return a < b ? Edge(a, b) : Edge(b, a);
}

// Simple undirected graph keyed by user id. Symmetric adjacency, no
// self-loops, no parallel edges; every mutation preserves that.
class Graph {
 public:
  using Adjacency = std::map<UserId, std::set<UserId>>;

  void AddVertex(const UserId& u) { adjacency_.try_emplace(u); }

  // Returns false when the edge already exists. Self-loops are rejected.
  bool AddEdge(const UserId& u, const UserId& v) {
    if (u == v) {
      throw Error("core-model", "self-loop on '" + u.str() + "'");
    }
    if (!adjacency_[u].insert(v).second) return false;
    adjacency_[v].insert(u);
    ++edge_count_;
    return true;
  }

  bool RemoveEdge(const UserId& u, const UserId& v) {
    auto it = adjacency_.find(u);
    if (it == adjacency_.end() || it->second.erase(v) == 0) return false;
    adjacency_.at(v).erase(u);
    --edge_count_;
    return true;
  }

  bool HasVertex(const UserId& u) const { return adjacency_.contains(u); }

  bool HasEdge(const UserId& u, const UserId& v) const {
    auto it = adjacency_.find(u);
    return it != adjacency_.end() && it->second.contains(v);
  }

  // Throws NotFoundError for an unknown vertex.
  const std::set<UserId>& Neighbors(const UserId& u) const {
    auto it = adjacency_.find(u);
    if (it == adjacency_.end()) {
      throw NotFoundError("core-model", "unknown vertex '" + u.str() + "'");
    }
    return it->second;
  }

  size_t Degree(const UserId& u) const { return Neighbors(u).size(); }

  size_t VertexCount() const { return adjacency_.size(); }
  size_t EdgeCount() const { return edge_count_; }

  const Adjacency& adjacency() const { return adjacency_; }

  std::vector<UserId> Vertices() const {
    std::vector<UserId> out;
    out.reserve(adjacency_.size());
    for (const auto& [u, _] : adjacency_) out.push_back(u);
    return out;
  }

  // Sorted by (smaller endpoint, larger endpoint).
  std::vector<Edge> Edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [u, nbrs] : adjacency_) {
      for (auto it = nbrs.upper_bound(u); it != nbrs.end(); ++it) {
        out.emplace_back(u, *it);
      }
    }
    return out;
  }

  // Full structural check; O(V + E log E).
  bool SatisfiesInvariants() const {
    size_t half_degree_sum = 0;
    for (const auto& [u, nbrs] : adjacency_) {
      for (const UserId& v : nbrs) {
        if (v == u) return false;
        auto it = adjacency_.find(v);
        if (it == adjacency_.end() || !it->second.contains(u)) return false;
      }
      half_degree_sum += nbrs.size();
    }
    return half_degree_sum % 2 == 0 && half_degree_sum / 2 == edge_count_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Adjacency adjacency_;
  size_t edge_count_ = 0;
};

}  // namespace deanon

#endif  // DEANON_CORE_GRAPH_HPP_
