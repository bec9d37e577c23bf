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

#ifndef DEANON_HARNESS_RELEASE_HPP_
#define DEANON_HARNESS_RELEASE_HPP_

#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "deanon/core/dataset.hpp"
#include "deanon/core/ground_truth.hpp"
#include "deanon/error.hpp"
#include "deanon/random.hpp"

namespace deanon {

struct Release {
  Dataset anon;
  GroundTruth truth;
};

namespace internal {

// Random "<prefix><12 hex>" names, unique and never equal to a reserved one.
class PseudonymSource {
 public:
  PseudonymSource(uint64_t seed, char prefix, const std::set<std::string>& reserved)
      : rng_(seed), prefix_(prefix), reserved_(reserved) {}

  std::string Next() {
    for (;;) {
      char buf[24];
      std::snprintf(buf, sizeof(buf), "%c%012llx", prefix_,
                    static_cast<unsigned long long>(rng_.Next() >> 16));
      if (!reserved_.contains(buf) && issued_.insert(buf).second) return buf;
    }
  }

 private:
  Rng rng_;
  char prefix_;
  const std::set<std::string>& reserved_;
  std::set<std::string> issued_;
};

}  // namespace internal

// Throws unless `truth` is a bijection from the release's vertex set onto the
// public vertex set under which edges and posts correspond exactly.
inline void VerifyRelease(const Dataset& public_data, const Release& release) {
  const auto& map = release.truth.mapping();
  const Graph& pub = public_data.graph();
  const Graph& anon = release.anon.graph();
  auto fail = [](const std::string& why) {
    throw Error("eval-harness", "release check failed: " + why);
  };
  if (map.size() != anon.VertexCount() || map.size() != pub.VertexCount()) {
    fail("ground truth does not cover both vertex sets");
  }
  for (const auto& [a, p] : map) {
    if (!anon.HasVertex(a) || !pub.HasVertex(p)) fail("unknown id in ground truth");
  }
  if (anon.EdgeCount() != pub.EdgeCount()) fail("edge counts differ");
  for (const auto& [u, v] : anon.Edges()) {
    if (!pub.HasEdge(map.at(u), map.at(v))) fail("edge without public image");
  }
  for (const auto& [author, posts] : release.anon.posts()) {
    auto real = public_data.PostsOf(map.at(author));
    if (real.size() != posts.size()) fail("post counts differ for a user");
  }
}

// PII removal: every user id and post id is replaced by a fresh random
// pseudonym; structure and text are copied verbatim.
inline Release MakeRelease(const Dataset& public_data, uint64_t seed) {
  std::set<std::string> reserved;
  for (const UserId& u : public_data.graph().Vertices()) reserved.insert(u.str());
  for (const auto& [_, list] : public_data.posts()) {
    for (const Post& p : list) reserved.insert(p.post_id());
  }

  std::vector<UserId> users = public_data.graph().Vertices();
  Rng order_rng(DeriveSeed(seed, "release/order"));
  order_rng.Shuffle(users);
  internal::PseudonymSource user_names(DeriveSeed(seed, "release/users"), 'a',
                                       reserved);
  internal::PseudonymSource post_names(DeriveSeed(seed, "release/posts"), 'q',
                                       reserved);

  Release out;
  out.anon.set_label("anon");
  std::map<UserId, UserId> to_anon;
  for (const UserId& real : users) {
    UserId pseudo(user_names.Next());
    to_anon.emplace(real, pseudo);
    out.truth.Add(pseudo, real);
    out.anon.AddUser(pseudo);
  }
  for (const auto& [u, v] : public_data.graph().Edges()) {
    out.anon.AddEdge(to_anon.at(u), to_anon.at(v));
  }
  // Posts in a shuffled user order so post pseudonyms carry no ordering hint.
  for (const UserId& real : users) {
    for (const Post& p : public_data.PostsOf(real)) {
      out.anon.AddPost(p.WithIdentity(post_names.Next(), to_anon.at(real)));
    }
  }
  VerifyRelease(public_data, out);
  return out;
}

}  // namespace deanon

#endif  // DEANON_HARNESS_RELEASE_HPP_
