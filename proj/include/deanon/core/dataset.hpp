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

#ifndef DEANON_CORE_DATASET_HPP_
#define DEANON_CORE_DATASET_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deanon/core/graph.hpp"
#include "deanon/core/post.hpp"
#include "deanon/core/user_id.hpp"
#include "deanon/error.hpp"

namespace deanon {

// Posts grouped by author. Each list is sorted by post_id; users without
// posts have no entry.
using PostsByUser = std::map<UserId, std::vector<Post>>;

// Total number of posts across all users.
inline size_t CountPosts(const PostsByUser& posts) {
  size_t n = 0;
  for (const auto& [_, list] : posts) n += list.size();
  return n;
}

// Heterogeneous social data: a friendship graph plus the users' posts. The
// vertex set always covers every post author, and post ids are unique.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::string label) : label_(std::move(label)) {}

  // Assembles a dataset from parts, re-checking every invariant.
  Dataset(Graph graph, const PostsByUser& posts, std::string label)
      : graph_(std::move(graph)), label_(std::move(label)) {
    SetPosts(posts);
  }

  const Graph& graph() const { return graph_; }
  // The new graph must still contain every post author.
  void set_graph(Graph graph) {
    for (const auto& [author, _] : posts_) {
      if (!graph.HasVertex(author)) {
        throw Error("core-model",
                    "graph drops post author '" + author.str() + "'");
      }
    }
    graph_ = std::move(graph);
  }
  const PostsByUser& posts() const { return posts_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  void AddUser(const UserId& u) { graph_.AddVertex(u); }

  // False when the edge is already present.
  bool AddEdge(const UserId& u, const UserId& v) { return graph_.AddEdge(u, v); }

  void AddPost(Post post) {
    if (!post_ids_.insert(post.post_id()).second) {
      throw Error("core-model", "duplicate post id '" + post.post_id() + "'");
    }
    graph_.AddVertex(post.author());
    auto& list = posts_[post.author()];
    auto pos = std::lower_bound(list.begin(), list.end(), post,
                                [](const Post& a, const Post& b) {
                                  return a.post_id() < b.post_id();
                                });
    list.insert(pos, std::move(post));
  }

  // Replaces every post. Used by the text anonymizers; authorship must stay
  // within the current vertex set.
  void SetPosts(const PostsByUser& posts) {
    posts_.clear();
    post_ids_.clear();
    for (const auto& [author, list] : posts) {
      for (const Post& p : list) {
        if (p.author() != author) {
          throw Error("core-model", "post '" + p.post_id() +
                                        "' filed under the wrong author");
        }
        AddPost(p);
      }
    }
  }

  std::span<const Post> PostsOf(const UserId& u) const {
    auto it = posts_.find(u);
    if (it == posts_.end()) return {};
    return it->second;
  }

  size_t UserCount() const { return graph_.VertexCount(); }
  size_t PostCount() const { return post_ids_.size(); }

  // Content equality; the label is descriptive metadata and is ignored.
  friend bool operator==(const Dataset& a, const Dataset& b) {
    return a.graph_ == b.graph_ && a.posts_ == b.posts_;
  }

 private:
  Graph graph_;
  PostsByUser posts_;
  std::set<std::string> post_ids_;
  std::string label_;
};

}  // namespace deanon

#endif  // DEANON_CORE_DATASET_HPP_
