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

// The deanon command line: synth, anonymize, attack, evaluate, case-matrix.
// Each subcommand is a thin wrapper over one library entry point.

#ifndef DEANON_TOOLS_CLI_HPP_
#define DEANON_TOOLS_CLI_HPP_

#include <cstdint>
#include <exception>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deanon/deanon.hpp"

namespace deanon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

inline constexpr char kTruthFile[] = "ground_truth.tsv";

namespace internal {

struct SynthArgs {
  SynthConfig config;
  std::string out_dir;
  std::string platform_out;
};

struct AnonymizeArgs {
  std::string in_dir;
  std::string out_dir;
  std::string truth_out;
  int case_number = 4;
  std::string graph_technique = "edge_perturbation";
  double graph_fraction = GraphAnonConfig().fraction;
  size_t k_degree = GraphAnonConfig().k;
  std::string text_technique = "idf_suppression";
  double text_rate = TextAnonConfig().rate;
  uint64_t seed = 1;
};

struct AttackArgs {
  std::string anon_dir;
  std::string platform_dir;
  size_t top_k = AttackConfig().top_k_posts;
  size_t candidates = AttackConfig().candidate_limit;
  std::string weights;
  size_t query_budget = 0;
  std::string out;
  size_t jobs = 1;
  size_t sample = 0;
  uint64_t seed = 1;
};

struct EvaluateArgs {
  std::string mapping;
  std::string truth;
  std::string out;
};

struct CaseMatrixArgs {
  std::string config;
  std::string out;
  size_t jobs = 0;  // 0 keeps the config file's value
};

inline std::string MetricsTable(const AttackMetrics& m) {
  return std::string("# ") + kToolName + " " + kVersion + "\n" +
         "n_targets\ttop1_accuracy\tcandidate_recall\tmean_rank_of_truth\tmean_queries\n" +
         std::to_string(m.n_targets) + "\t" + Fixed6(m.top1_accuracy) + "\t" +
         Fixed6(m.candidate_recall) + "\t" + Fixed6(m.mean_rank_of_truth) + "\t" +
         Fixed6(m.mean_queries) + "\n";
}

inline void RunSynth(const SynthArgs& a, std::ostream& out) {
  const Dataset data = GenerateSynthetic(a.config);
  SaveDataset(data, a.out_dir);
  if (!a.platform_out.empty()) SavePlatform(data, a.platform_out);
  out << "synth: " << data.UserCount() << " users, " << data.graph().EdgeCount()
      << " edges, " << data.PostCount() << " posts -> " << a.out_dir << "\n";
}

inline void RunAnonymize(const AnonymizeArgs& a, std::ostream& out) {
  const Dataset public_data = LoadDatasetDir(a.in_dir, "public");
  GraphAnonConfig g;
  g.technique = ParseGraphTechnique(a.graph_technique);
  g.fraction = a.graph_fraction;
  g.k = a.k_degree;
  TextAnonConfig t;
  t.technique = ParseTextTechnique(a.text_technique);
  t.rate = a.text_rate;
  const CaseId c = static_cast<CaseId>(a.case_number);
  const Release release = PrepareCase(public_data, c, g, t, a.seed);
  SaveDataset(release.anon, a.out_dir);
  const std::filesystem::path truth =
      a.truth_out.empty() ? std::filesystem::path(a.out_dir) / kTruthFile
                          : std::filesystem::path(a.truth_out);
  SaveGroundTruth(release.truth, truth);
  out << "anonymize: " << CaseName(c) << ", " << release.anon.UserCount() << " users -> "
      << a.out_dir << "; ground truth -> " << truth.string() << "\n";
}

inline void RunAttack(const AttackArgs& a, std::ostream& out) {
  AttackConfig config;
  config.top_k_posts = a.top_k;
  config.candidate_limit = a.candidates;
  if (!a.weights.empty()) config.weights = ParseWeights(a.weights);
  if (a.query_budget > 0) config.query_budget = a.query_budget;
  // Only the released edges and posts are read from the anon directory.
  const Dataset release = LoadDatasetDir(a.anon_dir, "anon");
  const PlatformIndex index = LoadPlatform(a.platform_dir);
  const Attacker attacker(release, config);
  const std::vector<UserId> targets = ChooseTargets(release, a.sample, a.seed);
  const BatchResult batch = AttackAll(attacker, index, targets, a.jobs);
  SaveMapping(batch.mappings, a.out);
  size_t claimed = 0;
  for (const MappingResult& m : batch.mappings) claimed += m.claimed ? 1 : 0;
  out << "attack: " << targets.size() << " targets, " << claimed << " claimed, "
      << batch.log.count() << " platform calls -> " << a.out << "\n";
}

inline void RunEvaluate(const EvaluateArgs& a, std::ostream& out) {
  const std::vector<MappingResult> mappings = LoadMapping(a.mapping);
  const GroundTruth truth = LoadGroundTruth(a.truth);
  const std::string table = MetricsTable(EvaluateAttack(mappings, truth));
  if (!a.out.empty()) {
    ::deanon::internal::WriteFile(a.out, table);
  }
  out << table;
}

inline void RunCaseMatrixCommand(const CaseMatrixArgs& a, std::ostream& out) {
  ExperimentConfig config = LoadExperimentConfig(a.config);
  if (a.jobs > 0) config.jobs = a.jobs;
  const CaseMatrixReport report = RunCaseMatrix(config);
  const std::filesystem::path path(a.out);
  if (path.has_parent_path()) ::deanon::internal::EnsureDirectory(path.parent_path());
  WriteReport(report, path);
  out << FormatReport(report);
}

}  // namespace internal

// Runs one command line. `args` excludes the program name. Returns the exit
// code: 0 on success, 1 on a domain error, 2 on a usage error.
inline int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace internal;
  CLI::App app{std::string(kToolName) + " " + kVersion +
               ": attribute-based de-anonymization experiments"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  SynthArgs synth;
  CLI::App* s = app.add_subcommand("synth", "Generate a synthetic public dataset");
  s->add_option("--users", synth.config.n_users, "Number of users")->capture_default_str();
  s->add_option("--seed", synth.config.seed, "Generator seed")->capture_default_str();
  s->add_option("--edges-per-user", synth.config.edges_per_new_vertex,
                "Edges added per new user")->capture_default_str();
  s->add_option("--posts-per-user", synth.config.posts_per_user)->capture_default_str();
  s->add_option("--tokens-per-post", synth.config.tokens_per_post)->capture_default_str();
  s->add_option("--out-dir", synth.out_dir, "Output dataset directory")->required();
  s->add_option("--platform-out", synth.platform_out, "Also write a platform directory");

  AnonymizeArgs anon;
  const std::vector<std::string> graph_names{"edge_perturbation", "k_degree"};
  const std::vector<std::string> text_names{"idf_suppression", "random_substitution"};
  CLI::App* an = app.add_subcommand("anonymize", "Pseudonymize and anonymize a dataset");
  an->add_option("--in-dir", anon.in_dir, "Public dataset directory")->required();
  an->add_option("--out-dir", anon.out_dir, "Released dataset directory")->required();
  an->add_option("--truth-out", anon.truth_out,
                 "Ground-truth file (default <out-dir>/ground_truth.tsv)");
  an->add_option("--case", anon.case_number, "Case 1-4")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  an->add_option("--graph-technique", anon.graph_technique)
      ->check(CLI::IsMember(graph_names))
      ->capture_default_str();
  an->add_option("--graph-fraction", anon.graph_fraction)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  an->add_option("--k-degree", anon.k_degree)->check(CLI::PositiveNumber)->capture_default_str();
  an->add_option("--text-technique", anon.text_technique)
      ->check(CLI::IsMember(text_names))
      ->capture_default_str();
  an->add_option("--text-rate", anon.text_rate)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  an->add_option("--seed", anon.seed, "Seed for release and anonymization")->capture_default_str();

  AttackArgs attack;
  CLI::App* at = app.add_subcommand("attack", "Map released users to platform users");
  at->add_option("--anon-dir", attack.anon_dir, "Released dataset directory")->required();
  at->add_option("--platform-dir", attack.platform_dir, "Platform directory")->required();
  at->add_option("--top-k", attack.top_k, "Revealing posts per target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  at->add_option("--candidates", attack.candidates, "Candidates per target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  at->add_option("--weights", attack.weights, "w_text,w_struct,w_ntext,w_nstruct");
  at->add_option("--query-budget", attack.query_budget, "Platform calls per target (0 = none)");
  at->add_option("--out", attack.out, "mapping.tsv path")->required();
  at->add_option("--jobs", attack.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  at->add_option("--sample", attack.sample, "Attack a seeded sample (0 = all)")
      ->capture_default_str();
  at->add_option("--seed", attack.seed, "Seed for --sample")->capture_default_str();

  EvaluateArgs eval;
  CLI::App* ev = app.add_subcommand("evaluate", "Score a mapping against ground truth");
  ev->add_option("--mapping", eval.mapping, "mapping.tsv path")->required();
  ev->add_option("--truth", eval.truth, "Ground-truth file")->required();
  ev->add_option("--out", eval.out, "Also write the table here");

  CaseMatrixArgs matrix;
  CLI::App* cm = app.add_subcommand("case-matrix", "Run all four cases over several seeds");
  cm->add_option("--config", matrix.config, "Experiment config file")->required();
  cm->add_option("--out", matrix.out, "report.tsv path")->required();
  cm->add_option("--jobs", matrix.jobs, "Worker threads (overrides the config)");

  std::vector<std::string> storage{kToolName};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (s->parsed()) RunSynth(synth, out);
    if (an->parsed()) RunAnonymize(anon, out);
    if (at->parsed()) RunAttack(attack, out);
    if (ev->parsed()) RunEvaluate(eval, out);
    if (cm->parsed()) RunCaseMatrixCommand(matrix, out);
  } catch (const Error& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << kToolName << ": " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace deanon::cli

#endif  // DEANON_TOOLS_CLI_HPP_
