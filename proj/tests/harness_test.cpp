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

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "deanon/deanon.hpp"
#include "test_support.hpp"

namespace deanon {
namespace {

using ::deanon::testing::TempDir;
using ::deanon::testing::U;

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

ExperimentConfig SmallExperiment() {
  ExperimentConfig c;
  c.synth = testing::SmallSynth(60, 11);
  c.n_seeds = 2;
  return c;
}

// ---- synthetic data ---------------------------------------------------------

TEST(SyntheticTest, Deterministic) {
  EXPECT_EQ(GenerateSynthetic(testing::SmallSynth(80, 2)),
            GenerateSynthetic(testing::SmallSynth(80, 2)));
  EXPECT_NE(GenerateSynthetic(testing::SmallSynth(80, 2)),
            GenerateSynthetic(testing::SmallSynth(80, 3)));
}

TEST(SyntheticTest, PreferentialAttachmentEdgeCount) {
  SynthConfig c = testing::SmallSynth(100, 1);
  c.edges_per_new_vertex = 4;
  const Dataset d = GenerateSynthetic(c);
  // Seed clique of 4 (6 edges) plus 4 edges for each of the other 96 users.
  EXPECT_EQ(d.graph().EdgeCount(), 390u);
  EXPECT_EQ(d.UserCount(), 100u);
  EXPECT_EQ(d.PostCount(), 600u);
  EXPECT_TRUE(d.graph().SatisfiesInvariants());
  for (const UserId& u : d.graph().Vertices()) EXPECT_GE(d.graph().Degree(u), 3u);
}

TEST(SyntheticTest, PostShape) {
  const Dataset d = GenerateSynthetic(testing::SmallSynth(30, 4));
  for (const auto& [_, list] : d.posts()) {
    ASSERT_EQ(list.size(), 6u);
    for (const Post& p : list) ASSERT_EQ(p.tokens().size(), 8u);
  }
}

TEST(SyntheticTest, NoPersonalTermsAtZeroProbability) {
  SynthConfig c = testing::SmallSynth(40, 5);
  c.personal_term_prob = 0.0;
  const Dataset d = GenerateSynthetic(c);
  for (const auto& [_, list] : d.posts()) {
    for (const Post& p : list) {
      for (const std::string& t : p.tokens()) ASSERT_FALSE(t.starts_with("pers")) << t;
    }
  }
}

TEST(SyntheticTest, PersonalTermsStayWithTheirOwner) {
  const Dataset d = GenerateSynthetic(testing::SmallSynth(40, 6));
  for (const auto& [author, list] : d.posts()) {
    for (const Post& p : list) {
      for (const std::string& t : p.tokens()) {
        if (t.starts_with("pers")) {
          const size_t index = std::stoul(author.str().substr(4));
          ASSERT_TRUE(t.starts_with("pers" + std::to_string(index) + "x")) << t;
        }
      }
    }
  }
}

TEST(SyntheticTest, InvalidConfigs) {
  SynthConfig c = testing::SmallSynth(4, 1);
  c.edges_per_new_vertex = 4;
  EXPECT_THROW(GenerateSynthetic(c), Error);
  c = testing::SmallSynth(10, 1);
  c.personal_term_prob = 1.5;
  EXPECT_THROW(GenerateSynthetic(c), Error);
  c = testing::SmallSynth(10, 1);
  c.n_communities = 0;
  EXPECT_THROW(GenerateSynthetic(c), Error);
}

// ---- release ------------------------------------------------------------------

TEST(ReleaseTest, BijectionAndIsomorphism) {
  const Dataset pub = GenerateSynthetic(testing::SmallSynth(50, 8));
  const Release r = MakeRelease(pub, 3);
  const auto& map = r.truth.mapping();
  ASSERT_EQ(map.size(), pub.UserCount());
  std::set<UserId> images;
  for (const auto& [a, p] : map) {
    images.insert(p);
    EXPECT_FALSE(pub.graph().HasVertex(a)) << "pseudonym collides with a public id";
  }
  EXPECT_EQ(images.size(), map.size());
  EXPECT_EQ(r.anon.graph().EdgeCount(), pub.graph().EdgeCount());
  for (const auto& [u, v] : r.anon.graph().Edges()) {
    EXPECT_TRUE(pub.graph().HasEdge(map.at(u), map.at(v)));
  }
  for (const auto& [a, p] : map) {
    const auto mine = r.anon.PostsOf(a);
    const auto theirs = pub.PostsOf(p);
    ASSERT_EQ(mine.size(), theirs.size());
    std::multiset<std::vector<std::string>> x, y;
    for (const Post& post : mine) x.insert(post.tokens());
    for (const Post& post : theirs) y.insert(post.tokens());
    EXPECT_EQ(x, y);
  }
}

TEST(ReleaseTest, PostIdsArePseudonymized) {
  const Dataset pub = GenerateSynthetic(testing::SmallSynth(20, 8));
  std::set<std::string> public_ids;
  for (const auto& [_, list] : pub.posts()) {
    for (const Post& p : list) public_ids.insert(p.post_id());
  }
  const Release r = MakeRelease(pub, 1);
  for (const auto& [_, list] : r.anon.posts()) {
    for (const Post& p : list) EXPECT_FALSE(public_ids.contains(p.post_id()));
  }
}

TEST(ReleaseTest, DeterministicPerSeed) {
  const Dataset pub = GenerateSynthetic(testing::SmallSynth(20, 8));
  EXPECT_EQ(MakeRelease(pub, 4).anon, MakeRelease(pub, 4).anon);
  EXPECT_EQ(MakeRelease(pub, 4).truth, MakeRelease(pub, 4).truth);
  EXPECT_NE(MakeRelease(pub, 4).truth, MakeRelease(pub, 5).truth);
}

TEST(ReleaseTest, VerifyCatchesBrokenTruth) {
  const Dataset pub = GenerateSynthetic(testing::SmallSynth(20, 8));
  Release r = MakeRelease(pub, 2);
  Graph g = r.anon.graph();
  const auto e = g.Edges().front();
  g.RemoveEdge(e.first, e.second);
  r.anon.set_graph(g);
  EXPECT_THROW(VerifyRelease(pub, r), Error);
}

// ---- cases ----------------------------------------------------------------------

class CaseTest : public ::testing::Test {
 protected:
  CaseTest() : pub_(GenerateSynthetic(testing::SmallSynth(60, 9))), release_(MakeRelease(pub_, 1)) {
    graph_.fraction = 0.3;
    text_.rate = 0.3;
  }
  Dataset pub_;
  Release release_;
  GraphAnonConfig graph_;
  TextAnonConfig text_;
};

TEST_F(CaseTest, CaseOneUnchanged) {
  const Dataset d = ApplyCase(release_.anon, CaseId::kCase1, graph_, text_);
  EXPECT_EQ(d.graph(), release_.anon.graph());
  EXPECT_EQ(d.posts(), release_.anon.posts());
}

TEST_F(CaseTest, CaseTwoChangesTextOnly) {
  const Dataset d = ApplyCase(release_.anon, CaseId::kCase2, graph_, text_);
  EXPECT_EQ(d.graph(), release_.anon.graph());
  EXPECT_NE(d.posts(), release_.anon.posts());
  EXPECT_EQ(d.posts(), AnonymizeText(release_.anon.posts(), text_));
}

TEST_F(CaseTest, CaseThreeChangesGraphOnly) {
  const Dataset d = ApplyCase(release_.anon, CaseId::kCase3, graph_, text_);
  EXPECT_NE(d.graph(), release_.anon.graph());
  EXPECT_EQ(d.posts(), release_.anon.posts());
  EXPECT_EQ(d.graph(), AnonymizeGraph(release_.anon.graph(), graph_));
}

TEST_F(CaseTest, CaseFourIsGraphThenText) {
  const Dataset d = ApplyCase(release_.anon, CaseId::kCase4, graph_, text_);
  const Dataset three = ApplyCase(release_.anon, CaseId::kCase3, graph_, text_);
  EXPECT_EQ(d.graph(), three.graph());
  EXPECT_EQ(d.posts(), AnonymizeText(three.posts(), text_));
}

TEST(CaseNameTest, ParseAndPrint) {
  EXPECT_EQ(ParseCase("3"), CaseId::kCase3);
  EXPECT_EQ(ParseCase("case4"), CaseId::kCase4);
  EXPECT_EQ(CaseName(CaseId::kCase2), "case2");
  EXPECT_THROW(ParseCase("5"), Error);
  EXPECT_THROW(ParseCase("case0"), Error);
}

TEST(PrepareCaseTest, SharedSeedsAcrossCases) {
  const Dataset pub = GenerateSynthetic(testing::SmallSynth(40, 1));
  GraphAnonConfig g;
  TextAnonConfig t;
  const Release c2 = PrepareCase(pub, CaseId::kCase2, g, t, 7);
  const Release c3 = PrepareCase(pub, CaseId::kCase3, g, t, 7);
  const Release c4 = PrepareCase(pub, CaseId::kCase4, g, t, 7);
  EXPECT_EQ(c2.truth, c4.truth);
  EXPECT_EQ(c3.anon.graph(), c4.anon.graph());
  EXPECT_EQ(c2.anon.posts(), c4.anon.posts());
}

// ---- metrics --------------------------------------------------------------------

GroundTruth Identity(size_t n) {
  GroundTruth t;
  for (size_t i = 0; i < n; ++i) t.Add(U("a" + std::to_string(i)), U("r" + std::to_string(i)));
  return t;
}

MappingResult Claim(size_t target, std::vector<std::string> ranked) {
  MappingResult r{U("a" + std::to_string(target)), std::nullopt, 0.0, {}, 3};
  double s = 1.0;
  for (const std::string& c : ranked) r.ranked_candidates.push_back({U(c), s -= 0.1});
  if (!ranked.empty()) {
    r.claimed = r.ranked_candidates.front().user;
    r.score = r.ranked_candidates.front().score;
  }
  return r;
}

TEST(MetricsTest, AllCorrect) {
  std::vector<MappingResult> m;
  for (size_t i = 0; i < 4; ++i) m.push_back(Claim(i, {"r" + std::to_string(i), "zz"}));
  const AttackMetrics x = EvaluateAttack(m, Identity(4));
  EXPECT_EQ(x.n_targets, 4u);
  EXPECT_EQ(x.top1_accuracy, 1.0);
  EXPECT_EQ(x.candidate_recall, 1.0);
  EXPECT_EQ(x.mean_rank_of_truth, 1.0);
  EXPECT_EQ(x.mean_queries, 3.0);
}

TEST(MetricsTest, TruthNeverPresent) {
  std::vector<MappingResult> m{Claim(0, {"zz"}), Claim(1, {})};
  const AttackMetrics x = EvaluateAttack(m, Identity(2));
  EXPECT_EQ(x.top1_accuracy, 0.0);
  EXPECT_EQ(x.candidate_recall, 0.0);
  EXPECT_EQ(x.mean_rank_of_truth, 0.0);
}

TEST(MetricsTest, MixedRanks) {
  std::vector<MappingResult> m{Claim(0, {"r0"}), Claim(1, {"x", "y", "r1"}), Claim(2, {"x"}),
                               Claim(3, {"x", "r3"})};
  const AttackMetrics x = EvaluateAttack(m, Identity(4));
  EXPECT_DOUBLE_EQ(x.top1_accuracy, 0.25);
  EXPECT_DOUBLE_EQ(x.candidate_recall, 0.75);
  EXPECT_DOUBLE_EQ(x.mean_rank_of_truth, 2.0);
}

TEST(MetricsTest, EmptyAndUnknownTargets) {
  EXPECT_EQ(EvaluateAttack(std::vector<MappingResult>{}, Identity(2)).n_targets, 0u);
  std::vector<MappingResult> m{Claim(9, {"r0"})};
  EXPECT_THROW(EvaluateAttack(m, Identity(2)), NotFoundError);
}

TEST(MetricsTest, RandomClaimantBaseline) {
  const size_t n = 50, trials = 200;
  const GroundTruth truth = Identity(n);
  Rng rng(5);
  double total = 0.0;
  for (size_t t = 0; t < trials; ++t) {
    std::vector<MappingResult> m;
    for (size_t i = 0; i < n; ++i) m.push_back(Claim(i, {"r" + std::to_string(rng.UniformIndex(n))}));
    total += EvaluateAttack(m, truth).top1_accuracy;
  }
  // Mean of n * trials Bernoulli(1/n) draws.
  const double p = 1.0 / static_cast<double>(n);
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(n * trials));
  EXPECT_NEAR(total / static_cast<double>(trials), p, 4 * sigma);
}

TEST(MetricsTest, TopOneNeverExceedsRecall) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<MappingResult> m;
    for (size_t i = 0; i < 10; ++i) {
      std::vector<std::string> ranked;
      for (size_t j = 0, k = rng.UniformIndex(4); j < k; ++j) ranked.push_back("r" + std::to_string(rng.UniformIndex(10)));
      std::sort(ranked.begin(), ranked.end());
      ranked.erase(std::unique(ranked.begin(), ranked.end()), ranked.end());
      m.push_back(Claim(i, ranked));
    }
    const AttackMetrics x = EvaluateAttack(m, Identity(10));
    ASSERT_LE(x.top1_accuracy, x.candidate_recall);
  }
}

TEST(SummarizeTest, MeanAndSampleStd) {
  const std::vector<double> v{1, 2, 3, 4};
  const MeanStd s = Summarize(v);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.std, std::sqrt(5.0 / 3.0), 1e-12);
  EXPECT_EQ(Summarize(std::vector<double>{7}).std, 0.0);
}

// ---- case matrix ----------------------------------------------------------------

TEST(CaseMatrixTest, RowsAreCaseMajor) {
  const CaseMatrixReport r = RunCaseMatrix(SmallExperiment());
  ASSERT_EQ(r.rows.size(), 8u);
  ASSERT_EQ(r.aggregates.size(), 4u);
  for (size_t i = 0; i < r.rows.size(); ++i) {
    EXPECT_EQ(r.rows[i].case_id, kAllCases[i / 2]);
    EXPECT_EQ(r.rows[i].seed, 11u + i % 2);
    EXPECT_EQ(r.rows[i].metrics.n_targets, 60u);
    EXPECT_LE(r.rows[i].metrics.top1_accuracy, r.rows[i].metrics.candidate_recall);
  }
  EXPECT_EQ(r.aggregates[0].n_seeds, 2u);
  EXPECT_DOUBLE_EQ(r.aggregates[0].top1_accuracy.mean,
                   (r.rows[0].metrics.top1_accuracy + r.rows[1].metrics.top1_accuracy) / 2);
}

TEST(CaseMatrixTest, DeterministicAndJobsIndependent) {
  ExperimentConfig c = SmallExperiment();
  const std::string one = FormatReport(RunCaseMatrix(c));
  c.jobs = 4;
  EXPECT_EQ(FormatReport(RunCaseMatrix(c)), one);
}

TEST(CaseMatrixTest, SampleLimitsTargets) {
  ExperimentConfig c = SmallExperiment();
  c.sample = 10;
  for (const CaseReport& row : RunCaseMatrix(c).rows) EXPECT_EQ(row.metrics.n_targets, 10u);
}

TEST(CaseMatrixTest, ReportFormat) {
  const CaseMatrixReport r = RunCaseMatrix(SmallExperiment());
  const auto lines = Lines(FormatReport(r));
  ASSERT_EQ(lines.size(), 2u + 8u + 4u);
  EXPECT_EQ(lines[0], "# deanon " + std::string(kVersion));
  EXPECT_EQ(lines[1], kReportColumns);
  EXPECT_TRUE(lines[2].starts_with("case1\t11\t60\t"));
  EXPECT_TRUE(lines[10].starts_with("case1\tmean\t60.000000\t"));
  for (size_t i = 1; i < lines.size(); ++i) {
    EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), '\t'), 9) << lines[i];
  }
  TempDir dir;
  WriteReport(r, dir / "report.tsv");
  EXPECT_EQ(testing::ReadText(dir / "report.tsv"), FormatReport(r));
}

TEST(ChooseTargetsTest, SortedSubset) {
  const Dataset d = GenerateSynthetic(testing::SmallSynth(40, 2));
  const auto t = ChooseTargets(d, 7, 3);
  ASSERT_EQ(t.size(), 7u);
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
  EXPECT_EQ(ChooseTargets(d, 7, 3), t);
  EXPECT_EQ(ChooseTargets(d, 0, 3).size(), 40u);
}

// ---- experiment config ----------------------------------------------------------

TEST(ExperimentConfigTest, ParsesAllSections) {
  const ExperimentConfig c = ParseExperimentConfig(R"(# comment
[synth]
n_users = 120
seed = 3
[graph]
technique = k_degree
k = 4
[text]
technique = random_substitution
rate = 0.5   # trailing comment
[attack]
weights = 1, 1, 1, 1
query_budget = 500
[run]
n_seeds = 3
jobs = 2
)");
  EXPECT_EQ(c.synth.n_users, 120u);
  EXPECT_EQ(c.synth.seed, 3u);
  EXPECT_EQ(c.graph.technique, GraphTechnique::kKDegree);
  EXPECT_EQ(c.graph.k, 4u);
  EXPECT_EQ(c.text.technique, TextTechnique::kRandomSubstitution);
  EXPECT_EQ(c.text.rate, 0.5);
  EXPECT_EQ(c.attack.weights.text, 0.25);
  EXPECT_EQ(c.attack.query_budget, 500u);
  EXPECT_EQ(c.n_seeds, 3u);
  EXPECT_EQ(c.jobs, 2u);
}

TEST(ExperimentConfigTest, ErrorsNameTheLine) {
  auto error_of = [](const char* text) {
    try {
      ParseExperimentConfig(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(error_of("[synth]\nbogus = 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("n_users = 3\n").find("line 1"), std::string::npos);
  EXPECT_NE(error_of("[nope]\nx = 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("[text]\nrate = abc\n").find("line 2"), std::string::npos);
  EXPECT_NE(error_of("[attack]\nweights = 1,2,3\n").find("line 2"), std::string::npos);
  EXPECT_FALSE(error_of("[text]\nrate = 1.5\n").empty());
}

TEST(ExperimentConfigTest, CanonicalFormRoundTrips) {
  ExperimentConfig c = SmallExperiment();
  c.text.rate = 0.1;
  c.attack.weights = FeatureWeights::Normalized({1, 2, 3, 4});
  const ExperimentConfig back = ParseExperimentConfig(CanonicalConfig(c));
  EXPECT_EQ(CanonicalConfig(back), CanonicalConfig(c));
  EXPECT_EQ(ParamsDigest(back), ParamsDigest(c));
}

TEST(ExperimentConfigTest, DigestIgnoresJobsOnly) {
  ExperimentConfig a = SmallExperiment(), b = a;
  b.jobs = 8;
  EXPECT_EQ(ParamsDigest(a), ParamsDigest(b));
  b.text.rate = 0.3;
  EXPECT_NE(ParamsDigest(a), ParamsDigest(b));
  EXPECT_EQ(ParamsDigest(a).size(), 16u);
}

TEST(ExperimentConfigTest, LoadFromFile) {
  TempDir dir;
  testing::WriteText(dir / "exp.ini", "[run]\nn_seeds = 4\n");
  EXPECT_EQ(LoadExperimentConfig(dir / "exp.ini").n_seeds, 4u);
  EXPECT_THROW(LoadExperimentConfig(dir / "missing.ini"), Error);
}

// ---- mapping files ----------------------------------------------------------------

TEST(MappingIoTest, RoundTrip) {
  TempDir dir;
  std::vector<MappingResult> m{Claim(1, {"r1", "r0"}), Claim(0, {})};
  m[0].queries_used = 17;
  SaveMapping(m, dir / "mapping.tsv");
  EXPECT_EQ(testing::ReadText(dir / "mapping.tsv"), "a0\t-\t0.000000\na1\tr1\t0.900000\n");
  const auto back = LoadMapping(dir / "mapping.tsv");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].target, U("a1"));
  EXPECT_EQ(back[1].claimed, U("r1"));
  EXPECT_EQ(back[1].queries_used, 17u);
  ASSERT_EQ(back[1].ranked_candidates.size(), 2u);
  EXPECT_EQ(back[1].ranked_candidates[1].user, U("r0"));
  EXPECT_NEAR(back[1].ranked_candidates[1].score, 0.8, 1e-6);
  EXPECT_FALSE(back[0].claimed);
  EXPECT_TRUE(back[0].ranked_candidates.empty());
}

TEST(MappingIoTest, MalformedFilesRejected) {
  TempDir dir;
  testing::WriteText(dir / "m.tsv", "a0\tr0\n");
  EXPECT_THROW(LoadMapping(dir / "m.tsv"), Error);
  testing::WriteText(dir / "m.tsv", "a0\tr0\t0.5\na0\tr1\t0.2\n");
  EXPECT_THROW(LoadMapping(dir / "m.tsv"), Error);
  testing::WriteText(dir / "m.tsv", "a0\tr0\tabc\n");
  EXPECT_THROW(LoadMapping(dir / "m.tsv"), Error);
}

}  // namespace
}  // namespace deanon
