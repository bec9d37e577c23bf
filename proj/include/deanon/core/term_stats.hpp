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

#ifndef DEANON_CORE_TERM_STATS_HPP_
#define DEANON_CORE_TERM_STATS_HPP_

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "deanon/core/dataset.hpp"

namespace deanon {

// Hash that lets string-keyed tables be probed with a string_view.
struct TermHash {
  using is_transparent = void;
  size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};

using TermTable = std::unordered_map<std::string, size_t, TermHash, std::equal_to<>>;

// Document frequencies over some notion of "document" (a post, or all of a
// user's posts). idf(t) = ln(N / df(t)); a term never seen has idf 0.
class DocumentFrequencies {
 public:
  size_t documents() const { return documents_; }
  size_t vocabulary_size() const { return df_.size(); }

  size_t Df(std::string_view term) const {
    auto it = df_.find(term);
    return it == df_.end() ? 0 : it->second;
  }

  double Idf(std::string_view term) const {
    const size_t df = Df(term);
    if (df == 0) return 0.0;
    return std::log(static_cast<double>(documents_) / static_cast<double>(df));
  }

  const TermTable& table() const { return df_; }

  // Adds one document given its tokens (duplicates are counted once).
  void AddDocument(const std::vector<const std::vector<std::string>*>& parts) {
    ++documents_;
    std::unordered_set<std::string_view> seen;
    for (const auto* tokens : parts) {
      for (const std::string& t : *tokens) {
        if (!seen.insert(t).second) continue;
        if (auto it = df_.find(t); it != df_.end()) {
          ++it->second;
        } else {
          df_.emplace(t, 1);
        }
      }
    }
  }

 private:
  size_t documents_ = 0;
  TermTable df_;
};

// Every post is a document.
inline DocumentFrequencies PerPostFrequencies(const PostsByUser& posts) {
  DocumentFrequencies stats;
  for (const auto& [_, list] : posts) {
    for (const Post& p : list) stats.AddDocument({&p.tokens()});
  }
  return stats;
}

// Every user with at least one post is a document holding all their posts.
inline DocumentFrequencies PerUserFrequencies(const PostsByUser& posts) {
  DocumentFrequencies stats;
  for (const auto& [_, list] : posts) {
    if (list.empty()) continue;
    std::vector<const std::vector<std::string>*> parts;
    parts.reserve(list.size());
    for (const Post& p : list) parts.push_back(&p.tokens());
    stats.AddDocument(parts);
  }
  return stats;
}

}  // namespace deanon

#endif  // DEANON_CORE_TERM_STATS_HPP_
