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

#ifndef DEANON_HARNESS_CASE_MATRIX_HPP_
#define DEANON_HARNESS_CASE_MATRIX_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "deanon/attack/attack.hpp"
#include "deanon/attack/batch.hpp"
#include "deanon/core/io.hpp"
#include "deanon/harness/cases.hpp"
#include "deanon/harness/experiment_config.hpp"
#include "deanon/harness/metrics.hpp"
#include "deanon/harness/release.hpp"
#include "deanon/harness/synthetic.hpp"
#include "deanon/numeric.hpp"
#include "deanon/platform/platform_index.hpp"
#include "deanon/random.hpp"
#include "deanon/version.hpp"

namespace deanon {

// Seeds used for one run. The same graph seed serves case3 and case4, and the
// same text seed serves case2 and case4.
struct RunSeeds {
  uint64_t release = 0;
  uint64_t graph = 0;
  uint64_t text = 0;
};

inline RunSeeds PlanSeeds(uint64_t run_seed, uint64_t graph_seed, uint64_t text_seed) {
  return {DeriveSeed(run_seed, "release"),
          DeriveSeed(run_seed ^ MixSeed(graph_seed), "graph"),
          DeriveSeed(run_seed ^ MixSeed(text_seed), "text")};
}

// Pseudonymized release with the case's anonymization applied.
inline Release PrepareCase(const Dataset& public_data, CaseId c, GraphAnonConfig g,
                           TextAnonConfig t, uint64_t run_seed) {
  const RunSeeds seeds = PlanSeeds(run_seed, g.seed, t.seed);
  Release r = MakeRelease(public_data, seeds.release);
  g.seed = seeds.graph;
  t.seed = seeds.text;
  r.anon = ApplyCase(r.anon, c, g, t);
  return r;
}

// First `sample` users of a seeded shuffle, in id order; all users if 0.
inline std::vector<UserId> ChooseTargets(const Dataset& anon, size_t sample,
                                         uint64_t seed) {
  std::vector<UserId> users = anon.graph().Vertices();
  if (sample == 0 || sample >= users.size()) return users;
  Rng rng(DeriveSeed(seed, "targets"));
  rng.Shuffle(users);
  users.erase(users.begin() + static_cast<std::ptrdiff_t>(sample), users.end());
  std::sort(users.begin(), users.end());
  return users;
}

struct CaseReport {
  CaseId case_id = CaseId::kCase1;
  uint64_t seed = 0;
  AttackMetrics metrics;
  std::string params_digest;
};

struct CaseAggregate {
  CaseId case_id = CaseId::kCase1;
  size_t n_seeds = 0;
  double n_targets = 0.0;
  MeanStd top1_accuracy;
  MeanStd candidate_recall;
  MeanStd mean_rank_of_truth;
  MeanStd mean_queries;
  std::string params_digest;
};

struct CaseMatrixReport {
  std::vector<CaseReport> rows;          // case-major, then seed
  std::vector<CaseAggregate> aggregates; // case1..case4
};

inline CaseMatrixReport RunCaseMatrix(const ExperimentConfig& config) {
  config.Validate();
  const std::string digest = ParamsDigest(config);
  std::vector<std::vector<CaseReport>> per_case(kAllCases.size());

  for (size_t i = 0; i < config.n_seeds; ++i) {
    SynthConfig synth = config.synth;
    synth.seed = config.synth.seed + i;
    const Dataset public_data = GenerateSynthetic(synth);
    const PlatformIndex index(public_data);

    for (size_t c = 0; c < kAllCases.size(); ++c) {
      const Release release =
          PrepareCase(public_data, kAllCases[c], config.graph, config.text,
                      synth.seed);
      const std::vector<UserId> targets =
          ChooseTargets(release.anon, config.sample, synth.seed);
      const Attacker attacker(release.anon, config.attack);
      const BatchResult batch = AttackAll(attacker, index, targets, config.jobs);
      per_case[c].push_back(
          {kAllCases[c], synth.seed, EvaluateAttack(batch.mappings, release.truth), digest});
    }
  }

  CaseMatrixReport out;
  for (size_t c = 0; c < kAllCases.size(); ++c) {
    std::vector<double> top1, recall, rank, queries;
    double targets = 0.0;
    for (const CaseReport& r : per_case[c]) {
      out.rows.push_back(r);
      top1.push_back(r.metrics.top1_accuracy);
      recall.push_back(r.metrics.candidate_recall);
      rank.push_back(r.metrics.mean_rank_of_truth);
      queries.push_back(r.metrics.mean_queries);
      targets += static_cast<double>(r.metrics.n_targets);
    }
    CaseAggregate agg;
    agg.case_id = kAllCases[c];
    agg.n_seeds = per_case[c].size();
    agg.n_targets = targets / static_cast<double>(agg.n_seeds);
    agg.top1_accuracy = Summarize(top1);
    agg.candidate_recall = Summarize(recall);
    agg.mean_rank_of_truth = Summarize(rank);
    agg.mean_queries = Summarize(queries);
    agg.params_digest = digest;
    out.aggregates.push_back(agg);
  }
  return out;
}

inline constexpr const char* kReportColumns =
    "case\tseed\tn_targets\ttop1_accuracy\ttop1_std\tcandidate_recall\t"
    "candidate_recall_std\tmean_rank_of_truth\tmean_queries\tparams_digest";

// report.tsv: a version comment, the column header, one row per (case, seed)
// and one aggregate row per case with seed "mean".
inline std::string FormatReport(const CaseMatrixReport& report) {
  std::ostringstream o;
  o << "# " << kToolName << " " << kVersion << "\n" << kReportColumns << "\n";
  for (const CaseReport& r : report.rows) {
    o << CaseName(r.case_id) << "\t" << r.seed << "\t" << r.metrics.n_targets << "\t"
      << Fixed6(r.metrics.top1_accuracy) << "\t-\t" << Fixed6(r.metrics.candidate_recall)
      << "\t-\t" << Fixed6(r.metrics.mean_rank_of_truth) << "\t"
      << Fixed6(r.metrics.mean_queries) << "\t" << r.params_digest << "\n";
  }
  for (const CaseAggregate& a : report.aggregates) {
    o << CaseName(a.case_id) << "\tmean\t" << Fixed6(a.n_targets) << "\t"
      << Fixed6(a.top1_accuracy.mean) << "\t" << Fixed6(a.top1_accuracy.std) << "\t"
      << Fixed6(a.candidate_recall.mean) << "\t" << Fixed6(a.candidate_recall.std) << "\t"
      << Fixed6(a.mean_rank_of_truth.mean) << "\t" << Fixed6(a.mean_queries.mean) << "\t"
      << a.params_digest << "\n";
  }
  return o.str();
}

inline void WriteReport(const CaseMatrixReport& report, const std::filesystem::path& path) {
  internal::WriteFile(path, FormatReport(report));
}

}  // namespace deanon

#endif  // DEANON_HARNESS_CASE_MATRIX_HPP_
