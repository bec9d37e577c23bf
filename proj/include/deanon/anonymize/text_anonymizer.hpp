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

// Textual anonymization. Both techniques keep every post, its id and its
// author; only token content changes. A rewritten post's text is its
// space-joined token list, and untouched posts keep their original text.

#ifndef DEANON_ANONYMIZE_TEXT_ANONYMIZER_HPP_
#define DEANON_ANONYMIZE_TEXT_ANONYMIZER_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "deanon/core/dataset.hpp"
#include "deanon/core/term_stats.hpp"
#include "deanon/error.hpp"
#include "deanon/numeric.hpp"
#include "deanon/random.hpp"

namespace deanon {

enum class TextTechnique { kIdfSuppression, kRandomSubstitution };

inline std::string_view TextTechniqueName(TextTechnique t) {
  return t == TextTechnique::kIdfSuppression ? "idf_suppression"
                                             : "random_substitution";
}

inline TextTechnique ParseTextTechnique(std::string_view name) {
  if (name == "idf_suppression") return TextTechnique::kIdfSuppression;
  if (name == "random_substitution") return TextTechnique::kRandomSubstitution;
  throw Error("anonymize-text",
              "unknown text technique '" + std::string(name) + "'");
}

struct TextAnonConfig {
  TextTechnique technique = TextTechnique::kIdfSuppression;
  double rate = 0.2;
  uint64_t seed = 0;

  void Validate() const {
    if (!(rate >= 0.0 && rate <= 1.0)) {
      throw Error("anonymize-text", "rate must lie in [0, 1]");
    }
  }
};

namespace internal {

inline void CheckRate(double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw Error("anonymize-text", "rate must lie in [0, 1]");
  }
}

inline Post Rewrite(const Post& post, const std::vector<std::string>& tokens) {
  return tokens == post.tokens() ? post : post.WithTokens(tokens);
}

}  // namespace internal

// The round(rate * |vocabulary|) terms with the highest per-post idf, i.e.
// the lowest document frequency, ties broken lexicographically.
inline std::vector<std::string> MostRevealingTerms(const PostsByUser& posts,
                                                   double rate) {
  internal::CheckRate(rate);
  const DocumentFrequencies stats = PerPostFrequencies(posts);
  std::vector<std::pair<size_t, std::string>> ranked;
  ranked.reserve(stats.vocabulary_size());
  for (const auto& [term, df] : stats.table()) ranked.emplace_back(df, term);
  std::sort(ranked.begin(), ranked.end());
  const size_t count = RoundHalfUp(rate * static_cast<double>(ranked.size()));
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count && i < ranked.size(); ++i) {
    out.push_back(ranked[i].second);
  }
  return out;
}

// Deletes the most revealing terms (see MostRevealingTerms) from every post.
inline PostsByUser IdfSuppression(const PostsByUser& posts, double rate) {
  const std::vector<std::string> terms = MostRevealingTerms(posts, rate);
  const std::unordered_set<std::string> banned(terms.begin(), terms.end());
  PostsByUser out;
  for (const auto& [author, list] : posts) {
    auto& dest = out[author];
    dest.reserve(list.size());
    for (const Post& p : list) {
      std::vector<std::string> kept;
      kept.reserve(p.tokens().size());
      for (const std::string& t : p.tokens()) {
        if (!banned.contains(t)) kept.push_back(t);
      }
      dest.push_back(internal::Rewrite(p, kept));
    }
  }
  return out;
}

// Replaces each token independently with probability `rate` by a term drawn
// uniformly from the corpus vocabulary. Posts are visited by author, then
// post id, so the draw sequence is fixed by the seed. `replaced`, when given,
// receives the number of positions that were redrawn (a redraw may pick the
// original term).
inline PostsByUser RandomSubstitution(const PostsByUser& posts, double rate,
                                      uint64_t seed,
                                      size_t* replaced = nullptr) {
  internal::CheckRate(rate);
  std::set<std::string> vocab_set;
  for (const auto& [_, list] : posts) {
    for (const Post& p : list) vocab_set.insert(p.tokens().begin(), p.tokens().end());
  }
  if (vocab_set.empty() && rate > 0.0) {
    throw Error("anonymize-text",
                "random substitution needs a non-empty vocabulary");
  }
  const std::vector<std::string> vocab(vocab_set.begin(), vocab_set.end());
  if (replaced) *replaced = 0;
  if (rate == 0.0) return posts;

  Rng rng(seed);
  PostsByUser out;
  for (const auto& [author, list] : posts) {
    auto& dest = out[author];
    dest.reserve(list.size());
    for (const Post& p : list) {
      std::vector<std::string> tokens = p.tokens();
      for (std::string& t : tokens) {
        if (rng.Bernoulli(rate)) {
          t = vocab[rng.UniformIndex(vocab.size())];
          if (replaced) ++*replaced;
        }
      }
      dest.push_back(internal::Rewrite(p, tokens));
    }
  }
  return out;
}

inline PostsByUser AnonymizeText(const PostsByUser& posts,
                                 const TextAnonConfig& config) {
  config.Validate();
  switch (config.technique) {
    case TextTechnique::kIdfSuppression:
      return IdfSuppression(posts, config.rate);
    case TextTechnique::kRandomSubstitution:
      return RandomSubstitution(posts, config.rate, config.seed);
  }
  throw Error("anonymize-text", "unhandled technique");
}

}  // namespace deanon

#endif  // DEANON_ANONYMIZE_TEXT_ANONYMIZER_HPP_
