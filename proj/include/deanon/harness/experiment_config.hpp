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

// Experiment configuration file.
//
// INI-style text: `[section]` headers, `key = value` lines, `#` comments.
// Keys are the field names of the corresponding config struct:
//
//   [synth]  n_users edges_per_new_vertex posts_per_user tokens_per_post
//            vocab_shared vocab_per_community n_communities
//            personal_term_prob seed
//   [graph]  technique (edge_perturbation | k_degree) fraction k seed
//   [text]   technique (idf_suppression | random_substitution) rate seed
//   [attack] top_k_posts candidate_limit weights (four comma-separated
//            values, normalized to unit sum) histogram_buckets (index of the
//            last, pooled degree bucket) query_budget (count | unlimited)
//   [run]    n_seeds jobs sample (0 = attack every user)
//
// Omitted keys keep their defaults. Unknown sections or keys are errors.

#ifndef DEANON_HARNESS_EXPERIMENT_CONFIG_HPP_
#define DEANON_HARNESS_EXPERIMENT_CONFIG_HPP_

#include <array>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <sstream>
#include <string>
#include <string_view>

#include "deanon/anonymize/graph_anonymizer.hpp"
#include "deanon/anonymize/text_anonymizer.hpp"
#include "deanon/attack/attack_config.hpp"
#include "deanon/core/io.hpp"
#include "deanon/digest.hpp"
#include "deanon/error.hpp"
#include "deanon/harness/synthetic.hpp"

namespace deanon {

struct ExperimentConfig {
  SynthConfig synth;
  GraphAnonConfig graph;
  TextAnonConfig text;
  AttackConfig attack;
  size_t n_seeds = 1;
  size_t jobs = 1;    // does not affect results
  size_t sample = 0;  // targets per case and seed; 0 = all

  void Validate() const {
    synth.Validate();
    graph.Validate();
    text.Validate();
    attack.Validate();
    if (n_seeds < 1) throw Error("eval-harness", "n_seeds must be >= 1");
  }
};

namespace internal {

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline uint64_t ParseUnsigned(std::string_view s, std::string_view key) {
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("eval-harness", "'" + std::string(key) +
                                    "' expects a non-negative integer, got '" +
                                    std::string(s) + "'");
  }
  return v;
}

inline double ParseReal(std::string_view s, std::string_view key) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("eval-harness", "'" + std::string(key) + "' expects a number, got '" +
                                    std::string(s) + "'");
  }
  return v;
}

// Shortest round-trip representation.
inline std::string RealToString(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace internal

// "a,b,c,d" -> normalized weights.
inline FeatureWeights ParseWeights(std::string_view s) {
  std::array<double, 4> raw{};
  size_t i = 0;
  while (true) {
    const size_t comma = s.find(',');
    if (i >= 4) throw Error("attack", "weights need exactly four values");
    raw[i++] = internal::ParseReal(internal::Trim(s.substr(0, comma)), "weights");
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (i != 4) throw Error("attack", "weights need exactly four values");
  return FeatureWeights::Normalized(raw);
}

inline void SetConfigValue(ExperimentConfig& c, std::string_view section,
                           std::string_view key, std::string_view value) {
  using internal::ParseReal;
  using internal::ParseUnsigned;
  const std::string where = std::string(section) + "." + std::string(key);
  if (section == "synth") {
    SynthConfig& s = c.synth;
    if (key == "n_users") s.n_users = ParseUnsigned(value, where);
    else if (key == "edges_per_new_vertex") s.edges_per_new_vertex = ParseUnsigned(value, where);
    else if (key == "posts_per_user") s.posts_per_user = ParseUnsigned(value, where);
    else if (key == "tokens_per_post") s.tokens_per_post = ParseUnsigned(value, where);
    else if (key == "vocab_shared") s.vocab_shared = ParseUnsigned(value, where);
    else if (key == "vocab_per_community") s.vocab_per_community = ParseUnsigned(value, where);
    else if (key == "n_communities") s.n_communities = ParseUnsigned(value, where);
    else if (key == "personal_term_prob") s.personal_term_prob = ParseReal(value, where);
    else if (key == "seed") s.seed = ParseUnsigned(value, where);
    else throw Error("eval-harness", "unknown key '" + where + "'");
  } else if (section == "graph") {
    if (key == "technique") c.graph.technique = ParseGraphTechnique(value);
    else if (key == "fraction") c.graph.fraction = ParseReal(value, where);
    else if (key == "k") c.graph.k = ParseUnsigned(value, where);
    else if (key == "seed") c.graph.seed = ParseUnsigned(value, where);
    else throw Error("eval-harness", "unknown key '" + where + "'");
  } else if (section == "text") {
    if (key == "technique") c.text.technique = ParseTextTechnique(value);
    else if (key == "rate") c.text.rate = ParseReal(value, where);
    else if (key == "seed") c.text.seed = ParseUnsigned(value, where);
    else throw Error("eval-harness", "unknown key '" + where + "'");
  } else if (section == "attack") {
    AttackConfig& a = c.attack;
    if (key == "top_k_posts") a.top_k_posts = ParseUnsigned(value, where);
    else if (key == "candidate_limit") a.candidate_limit = ParseUnsigned(value, where);
    else if (key == "weights") a.weights = ParseWeights(value);
    else if (key == "histogram_buckets") a.buckets.max_bucket = ParseUnsigned(value, where);
    else if (key == "query_budget") {
      if (value == "unlimited") a.query_budget.reset();
      else a.query_budget = ParseUnsigned(value, where);
    } else {
      throw Error("eval-harness", "unknown key '" + where + "'");
    }
  } else if (section == "run") {
    if (key == "n_seeds") c.n_seeds = ParseUnsigned(value, where);
    else if (key == "jobs") c.jobs = ParseUnsigned(value, where);
    else if (key == "sample") c.sample = ParseUnsigned(value, where);
    else throw Error("eval-harness", "unknown key '" + where + "'");
  } else {
    throw Error("eval-harness", "unknown section '" + std::string(section) + "'");
  }
}

inline ExperimentConfig ParseExperimentConfig(std::string_view text) {
  ExperimentConfig config;
  std::string section;
  size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = internal::Trim(line);
    if (line.empty()) continue;
    try {
      if (line.front() == '[') {
        if (line.back() != ']') throw Error("eval-harness", "unterminated section header");
        section = std::string(internal::Trim(line.substr(1, line.size() - 2)));
        continue;
      }
      const size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw Error("eval-harness", "expected key = value");
      if (section.empty()) throw Error("eval-harness", "key outside of a section");
      SetConfigValue(config, section, internal::Trim(line.substr(0, eq)),
                     internal::Trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      throw Error("eval-harness",
                  "config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  config.Validate();
  return config;
}

inline ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path) {
  const std::string text = internal::ReadFile(path);
  return ParseExperimentConfig(text);
}

// Canonical text of every result-affecting setting. `jobs` is left out
// because it cannot change results.
inline std::string CanonicalConfig(const ExperimentConfig& c) {
  using internal::RealToString;
  std::ostringstream o;
  const SynthConfig& s = c.synth;
  o << "[synth]\n"
    << "n_users = " << s.n_users << "\n"
    << "edges_per_new_vertex = " << s.edges_per_new_vertex << "\n"
    << "posts_per_user = " << s.posts_per_user << "\n"
    << "tokens_per_post = " << s.tokens_per_post << "\n"
    << "vocab_shared = " << s.vocab_shared << "\n"
    << "vocab_per_community = " << s.vocab_per_community << "\n"
    << "n_communities = " << s.n_communities << "\n"
    << "personal_term_prob = " << RealToString(s.personal_term_prob) << "\n"
    << "seed = " << s.seed << "\n"
    << "[graph]\n"
    << "technique = " << GraphTechniqueName(c.graph.technique) << "\n"
    << "fraction = " << RealToString(c.graph.fraction) << "\n"
    << "k = " << c.graph.k << "\n"
    << "seed = " << c.graph.seed << "\n"
    << "[text]\n"
    << "technique = " << TextTechniqueName(c.text.technique) << "\n"
    << "rate = " << RealToString(c.text.rate) << "\n"
    << "seed = " << c.text.seed << "\n";
  const AttackConfig& a = c.attack;
  o << "[attack]\n"
    << "top_k_posts = " << a.top_k_posts << "\n"
    << "candidate_limit = " << a.candidate_limit << "\n"
    << "weights = " << RealToString(a.weights.text) << ","
    << RealToString(a.weights.structure) << ","
    << RealToString(a.weights.neighbor_text) << ","
    << RealToString(a.weights.neighbor_structure) << "\n"
    << "histogram_buckets = " << a.buckets.max_bucket << "\n"
    << "query_budget = "
    << (a.query_budget ? std::to_string(*a.query_budget) : "unlimited") << "\n"
    << "[run]\n"
    << "n_seeds = " << c.n_seeds << "\n"
    << "sample = " << c.sample << "\n";
  return o.str();
}

inline std::string ParamsDigest(const ExperimentConfig& c) {
  return DigestHex(CanonicalConfig(c));
}

}  // namespace deanon

#endif  // DEANON_HARNESS_EXPERIMENT_CONFIG_HPP_
