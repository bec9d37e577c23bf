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

#ifndef DEANON_HARNESS_CASES_HPP_
#define DEANON_HARNESS_CASES_HPP_

#include <array>
#include <string>
#include <string_view>

#include "deanon/anonymize/graph_anonymizer.hpp"
#include "deanon/anonymize/text_anonymizer.hpp"
#include "deanon/core/dataset.hpp"
#include "deanon/error.hpp"

namespace deanon {

// Which aspects of a pseudonymized release get anonymized:
//
//            structure  text
//   case1       -        -
//   case2       -        x
//   case3       x        -
//   case4       x        x
enum class CaseId { kCase1 = 1, kCase2 = 2, kCase3 = 3, kCase4 = 4 };

inline constexpr std::array<CaseId, 4> kAllCases = {
    CaseId::kCase1, CaseId::kCase2, CaseId::kCase3, CaseId::kCase4};

inline bool AnonymizesStructure(CaseId c) {
  return c == CaseId::kCase3 || c == CaseId::kCase4;
}

inline bool AnonymizesText(CaseId c) {
  return c == CaseId::kCase2 || c == CaseId::kCase4;
}

inline std::string CaseName(CaseId c) {
  return "case" + std::to_string(static_cast<int>(c));
}

// Accepts "1".."4" and "case1".."case4".
inline CaseId ParseCase(std::string_view s) {
  if (s.starts_with("case")) s.remove_prefix(4);
  if (s.size() == 1 && s[0] >= '1' && s[0] <= '4') {
    return static_cast<CaseId>(s[0] - '0');
  }
  throw Error("eval-harness", "unknown case '" + std::string(s) + "'");
}

// Graph anonymization runs before text anonymization in case4. The two
// steps draw from independent seeds, so the order only fixes the recipe.
inline Dataset ApplyCase(const Dataset& release, CaseId c,
                         const GraphAnonConfig& graph_config,
                         const TextAnonConfig& text_config) {
  graph_config.Validate();
  text_config.Validate();
  Dataset out = release;
  out.set_label("anon-" + CaseName(c));
  if (AnonymizesStructure(c)) {
    out.set_graph(AnonymizeGraph(out.graph(), graph_config));
  }
  if (AnonymizesText(c)) {
    out.SetPosts(AnonymizeText(out.posts(), text_config));
  }
  return out;
}

}  // namespace deanon

#endif  // DEANON_HARNESS_CASES_HPP_
