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

// On-disk platform directory.
//
//   <dir>/PLATFORM      text manifest, see below
//   <dir>/edges.tsv     public graph
//   <dir>/posts.jsonl   public posts
//
// Manifest lines, in order:
//
//   deanon-platform
//   format 1
//   edges <count>
//   posts <count>
//   edges.tsv <fnv1a-64 hex of the file>
//   posts.jsonl <fnv1a-64 hex of the file>
//
// The inverted index is rebuilt on load; building is deterministic, so a
// loaded index is identical to the one the directory was written from.

#ifndef DEANON_PLATFORM_PLATFORM_STORE_HPP_
#define DEANON_PLATFORM_PLATFORM_STORE_HPP_

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "deanon/core/io.hpp"
#include "deanon/digest.hpp"
#include "deanon/error.hpp"
#include "deanon/platform/platform_index.hpp"

namespace deanon {

inline constexpr char kPlatformManifest[] = "PLATFORM";
inline constexpr char kPlatformMagic[] = "deanon-platform";
inline constexpr int kPlatformFormat = 1;

inline void SavePlatform(const Dataset& public_data,
                         const std::filesystem::path& dir) {
  SaveDataset(public_data, dir);
  std::ostringstream m;
  m << kPlatformMagic << "\n"
    << "format " << kPlatformFormat << "\n"
    << "edges " << public_data.graph().EdgeCount() << "\n"
    << "posts " << public_data.PostCount() << "\n"
    << kEdgesFile << " " << DigestHex(internal::ReadFile(dir / kEdgesFile))
    << "\n"
    << kPostsFile << " " << DigestHex(internal::ReadFile(dir / kPostsFile))
    << "\n";
  internal::WriteFile(dir / kPlatformManifest, m.str());
}

// Loads the public dataset behind a platform directory after checking the
// manifest against the files.
inline Dataset LoadPlatformDataset(const std::filesystem::path& dir) {
  const auto manifest_path = dir / kPlatformManifest;
  std::vector<std::string> lines;
  internal::ForEachLine(manifest_path, [&](std::string_view line, size_t) {
    lines.emplace_back(line);
  });
  auto fail = [&](const std::string& why) {
    throw Error("platform", manifest_path.string() + ": " + why);
  };
  if (lines.size() != 6 || lines[0] != kPlatformMagic) {
    fail("not a platform manifest");
  }
  if (lines[1] != "format " + std::to_string(kPlatformFormat)) {
    fail("unsupported format '" + lines[1] + "'");
  }
  Dataset data = LoadDatasetDir(dir, "public");
  auto expect = [&](const std::string& line, const std::string& want) {
    if (line != want) fail("expected '" + want + "', found '" + line + "'");
  };
  expect(lines[2], "edges " + std::to_string(data.graph().EdgeCount()));
  expect(lines[3], "posts " + std::to_string(data.PostCount()));
  expect(lines[4], std::string(kEdgesFile) + " " +
                       DigestHex(internal::ReadFile(dir / kEdgesFile)));
  expect(lines[5], std::string(kPostsFile) + " " +
                       DigestHex(internal::ReadFile(dir / kPostsFile)));
  return data;
}

inline PlatformIndex LoadPlatform(const std::filesystem::path& dir) {
  return PlatformIndex(LoadPlatformDataset(dir));
}

}  // namespace deanon

#endif  // DEANON_PLATFORM_PLATFORM_STORE_HPP_
