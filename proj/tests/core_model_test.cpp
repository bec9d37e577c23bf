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

#include <cmath>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "deanon/deanon.hpp"
#include "test_support.hpp"

namespace deanon {
namespace {

using ::deanon::testing::U;
using Tokens = std::vector<std::string>;

TEST(TokenizeTest, EmptyInput) { EXPECT_EQ(Tokenize(""), Tokens{}); }

TEST(TokenizeTest, CaseFoldAndShortTokens) {
  EXPECT_EQ(Tokenize("Hello, WORLD! a"), (Tokens{"hello", "world"}));
}

TEST(TokenizeTest, HyphensAndSigils) {
  EXPECT_EQ(Tokenize("re-tweet @bob #NYC2020"), (Tokens{"re", "tweet", "bob", "nyc2020"}));
}

TEST(TokenizeTest, SeparatorsOnly) { EXPECT_EQ(Tokenize(" \t\n.,;!?-_"), Tokens{}); }

TEST(TokenizeTest, UnderscoreSplits) {
  EXPECT_EQ(Tokenize("snake_case x_y"), (Tokens{"snake", "case"}));
}

TEST(TokenizeTest, NonAsciiCountsCodePoints) {
  // "é" is one code point (two bytes) and gets dropped; "éa" survives.
  EXPECT_EQ(Tokenize("\xc3\xa9 \xc3\xa9" "a"), (Tokens{"\xc3\xa9" "a"}));
}

TEST(TokenizeTest, Pure) {
  const std::string s = "Same INPUT, same output 42!";
  EXPECT_EQ(Tokenize(s), Tokenize(s));
}

TEST(TokenizeTest, JoinRoundTrips) {
  const Tokens t = Tokenize("one two three");
  EXPECT_EQ(Tokenize(JoinTokens(t)), t);
}

TEST(UserIdTest, RejectsReservedCharacters) {
  EXPECT_THROW(UserId(""), Error);
  EXPECT_THROW(UserId("a\tb"), Error);
  EXPECT_THROW(UserId("a\nb"), Error);
  EXPECT_NO_THROW(UserId("ok id"));
}

TEST(PostTest, TokensDerivedFromText) {
  const Post p("p1", U("a"), "Hi THERE you");
  EXPECT_EQ(p.tokens(), (Tokens{"hi", "there", "you"}));
  EXPECT_EQ(p.WithTokens({"x1", "y2"}).text(), "x1 y2");
}

TEST(PostTest, RejectsBadPostId) { EXPECT_THROW(Post("", U("a"), "x"), Error); }

TEST(GraphTest, SymmetricNoSelfLoops) {
  Graph g;
  EXPECT_TRUE(g.AddEdge(U("a"), U("b")));
  EXPECT_FALSE(g.AddEdge(U("b"), U("a")));
  EXPECT_THROW(g.AddEdge(U("a"), U("a")), Error);
  EXPECT_EQ(g.EdgeCount(), 1u);
  EXPECT_TRUE(g.HasEdge(U("b"), U("a")));
  EXPECT_TRUE(g.SatisfiesInvariants());
}

TEST(GraphTest, UnknownVertexIsNotFound) {
  Graph g;
  g.AddVertex(U("a"));
  EXPECT_TRUE(g.Neighbors(U("a")).empty());
  EXPECT_THROW(g.Neighbors(U("zz")), NotFoundError);
}

TEST(GraphTest, EdgeCountIsHalfDegreeSum) {
  const Graph g = testing::RandomGraph(40, 0.2, 3);
  size_t sum = 0;
  for (const UserId& u : g.Vertices()) sum += g.Degree(u);
  EXPECT_EQ(g.EdgeCount() * 2, sum);
  EXPECT_TRUE(g.SatisfiesInvariants());
}

TEST(GraphTest, RemoveEdge) {
  Graph g = testing::Star(3);
  EXPECT_TRUE(g.RemoveEdge(U("l1"), U("c")));
  EXPECT_FALSE(g.RemoveEdge(U("l1"), U("c")));
  EXPECT_EQ(g.EdgeCount(), 2u);
  EXPECT_TRUE(g.HasVertex(U("l1")));
}

TEST(DatasetTest, AuthorsJoinVertexSet) {
  Dataset d;
  d.AddPost(Post("p", U("x"), "hello"));
  EXPECT_TRUE(d.graph().HasVertex(U("x")));
  EXPECT_THROW(d.AddPost(Post("p", U("y"), "dup")), Error);
}

TEST(DatasetTest, PostsSortedById) {
  Dataset d;
  d.AddPost(Post("b", U("x"), "two"));
  d.AddPost(Post("a", U("x"), "one"));
  ASSERT_EQ(d.PostsOf(U("x")).size(), 2u);
  EXPECT_EQ(d.PostsOf(U("x"))[0].post_id(), "a");
}

TEST(DatasetTest, SetGraphKeepsAuthors) {
  Dataset d;
  d.AddPost(Post("p", U("x"), "hello"));
  EXPECT_THROW(d.set_graph(Graph()), Error);
}

TEST(GroundTruthTest, Bijective) {
  GroundTruth t;
  t.Add(U("a1"), U("r1"));
  EXPECT_THROW(t.Add(U("a1"), U("r2")), Error);
  EXPECT_THROW(t.Add(U("a2"), U("r1")), Error);
  EXPECT_EQ(t.PublicId(U("a1")), U("r1"));
  EXPECT_THROW(t.PublicId(U("zz")), NotFoundError);
}

TEST(GroundTruthTest, ReadsAreCounted) {
  GroundTruth t;
  t.Add(U("a1"), U("r1"));
  const uint64_t before = probe::GroundTruthReads().load();
  (void)t.PublicId(U("a1"));
  (void)t.Contains(U("a1"));
  EXPECT_EQ(probe::GroundTruthReads().load(), before + 2);
}

TEST(TermStatsTest, PerPostIdf) {
  const Dataset d = testing::FruitCorpus();
  const DocumentFrequencies s = PerPostFrequencies(d.posts());
  EXPECT_EQ(s.documents(), 3u);
  EXPECT_EQ(s.Df("banana"), 2u);  // d3 repeats it but counts once
  EXPECT_NEAR(s.Idf("cherry"), std::log(3.0), 1e-12);
  EXPECT_EQ(s.Idf("unseen"), 0.0);
}

TEST(TermStatsTest, PerUserSkipsSilentUsers) {
  Dataset d = testing::FruitCorpus();
  d.AddUser(U("quiet"));
  EXPECT_EQ(PerUserFrequencies(d.posts()).documents(), 3u);
}

TEST(NumericTest, RoundHalfUp) {
  EXPECT_EQ(RoundHalfUp(0.5), 1u);
  EXPECT_EQ(RoundHalfUp(1.02), 1u);
  EXPECT_EQ(RoundHalfUp(2.5), 3u);
  EXPECT_EQ(RoundHalfUp(30.0), 30u);
}

TEST(NumericTest, Fixed6) {
  EXPECT_EQ(Fixed6(0.43), "0.430000");
  EXPECT_EQ(Fixed6(-0.0), "0.000000");
}

TEST(RandomTest, UniformIndexInRangeAndSeeded) {
  Rng a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const uint64_t x = a.UniformIndex(7);
    EXPECT_LT(x, 7u);
    EXPECT_EQ(x, b.UniformIndex(7));
  }
  EXPECT_NE(DeriveSeed(1, "a"), DeriveSeed(1, "b"));
}

}  // namespace
}  // namespace deanon
