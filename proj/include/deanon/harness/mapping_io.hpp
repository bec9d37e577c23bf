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

// Attack output files.
//
//   mapping.tsv         <anon_id> TAB <claimed_id or -> TAB <score, 6 decimals>
//   mapping.tsv.ranked  <anon_id> TAB <queries> TAB <rank> TAB <candidate> TAB
//                       <score, 6 decimals>
//
// The ranked file holds one line per candidate, rank 1 first. A target without
// candidates gets a single line with rank 0 and candidate "-". Both files are
// sorted by anon id.

#ifndef DEANON_HARNESS_MAPPING_IO_HPP_
#define DEANON_HARNESS_MAPPING_IO_HPP_

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "deanon/attack/attack.hpp"
#include "deanon/core/io.hpp"
#include "deanon/numeric.hpp"

namespace deanon {

inline std::filesystem::path RankedPathFor(const std::filesystem::path& mapping_path) {
  std::filesystem::path p = mapping_path;
  p += ".ranked";
  return p;
}

inline std::vector<MappingResult> SortedByTarget(std::vector<MappingResult> m) {
  std::sort(m.begin(), m.end(),
            [](const MappingResult& a, const MappingResult& b) { return a.target < b.target; });
  return m;
}

inline void SaveMapping(const std::vector<MappingResult>& mappings,
                        const std::filesystem::path& path) {
  if (path.has_parent_path()) internal::EnsureDirectory(path.parent_path());
  std::string flat, ranked;
  for (const MappingResult& r : SortedByTarget(mappings)) {
    const std::string target = r.target.str();
    flat += target + "\t" + (r.claimed ? r.claimed->str() : "-") + "\t" +
            Fixed6(r.score) + "\n";
    const std::string prefix = target + "\t" + std::to_string(r.queries_used) + "\t";
    if (r.ranked_candidates.empty()) ranked += prefix + "0\t-\t" + Fixed6(0.0) + "\n";
    for (size_t i = 0; i < r.ranked_candidates.size(); ++i) {
      ranked += prefix + std::to_string(i + 1) + "\t" + r.ranked_candidates[i].user.str() +
                "\t" + Fixed6(r.ranked_candidates[i].score) + "\n";
    }
  }
  internal::WriteFile(path, flat);
  internal::WriteFile(RankedPathFor(path), ranked);
}

namespace internal {

inline std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const size_t tab = line.find('\t');
    out.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) return out;
    line.remove_prefix(tab + 1);
  }
}

inline double ParseScore(std::string_view s, const std::filesystem::path& path,
                         size_t line_no) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    ThrowAtLine(path, line_no, "malformed number '" + std::string(s) + "'");
  }
  return v;
}

inline UserId ParseId(std::string_view s, const std::filesystem::path& path,
                      size_t line_no) {
  if (!UserId::IsValid(s)) ThrowAtLine(path, line_no, "malformed user id");
  return UserId(std::string(s));
}

}  // namespace internal

// Reads mapping.tsv and, when present, the ranked file next to it.
inline std::vector<MappingResult> LoadMapping(const std::filesystem::path& path) {
  std::map<UserId, MappingResult> by_target;
  internal::ForEachLine(path, [&](std::string_view line, size_t no) {
    const auto f = internal::SplitTabs(line);
    if (f.size() != 3) internal::ThrowAtLine(path, no, "expected 3 tab-separated fields");
    MappingResult r{internal::ParseId(f[0], path, no), std::nullopt, 0.0, {}, 0};
    if (f[1] != "-") r.claimed = internal::ParseId(f[1], path, no);
    r.score = internal::ParseScore(f[2], path, no);
    UserId key = r.target;
    if (!by_target.emplace(std::move(key), std::move(r)).second) {
      internal::ThrowAtLine(path, no, "duplicate target");
    }
  });

  const std::filesystem::path ranked = RankedPathFor(path);
  if (std::filesystem::exists(ranked)) {
    internal::ForEachLine(ranked, [&](std::string_view line, size_t no) {
      const auto f = internal::SplitTabs(line);
      if (f.size() != 5) internal::ThrowAtLine(ranked, no, "expected 5 tab-separated fields");
      auto it = by_target.find(internal::ParseId(f[0], ranked, no));
      if (it == by_target.end()) internal::ThrowAtLine(ranked, no, "target not in mapping");
      it->second.queries_used =
          static_cast<size_t>(internal::ParseScore(f[1], ranked, no));
      if (f[2] == "0") return;
      const size_t rank = static_cast<size_t>(internal::ParseScore(f[2], ranked, no));
      if (rank != it->second.ranked_candidates.size() + 1) {
        internal::ThrowAtLine(ranked, no, "ranks out of order");
      }
      it->second.ranked_candidates.push_back(
          {internal::ParseId(f[3], ranked, no), internal::ParseScore(f[4], ranked, no)});
    });
  }

  std::vector<MappingResult> out;
  out.reserve(by_target.size());
  for (auto& [_, r] : by_target) out.push_back(std::move(r));
  return out;
}

}  // namespace deanon

#endif  // DEANON_HARNESS_MAPPING_IO_HPP_
