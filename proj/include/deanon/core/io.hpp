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

// File ingestion and serialization.
//
//   edges.tsv     <user_id> TAB <user_id>, one undirected edge per line
//   posts.jsonl   {"post_id": ..., "text": ..., "user_id": ...} per line
//   ground_truth  <anon_id> TAB <public_id> per line
//
// All files are UTF-8 with LF line endings. Writers sort their output so the
// same dataset always produces the same bytes.

#ifndef DEANON_CORE_IO_HPP_
#define DEANON_CORE_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "deanon/core/dataset.hpp"
#include "deanon/core/ground_truth.hpp"
#include "deanon/error.hpp"
#include "json.hpp"

namespace deanon {

inline constexpr char kEdgesFile[] = "edges.tsv";
inline constexpr char kPostsFile[] = "posts.jsonl";
inline constexpr char kGroundTruthFile[] = "ground_truth.tsv";

// Returns the byte offset of the first invalid sequence, or npos.
inline size_t FindInvalidUtf8(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    size_t len;
    uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong forms, surrogates, and values past U+10FFFF.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

namespace internal {

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("core-model", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("core-model", "cannot read " + path.string());
  return std::move(buf).str();
}

// Calls `fn(line, line_number)` for each LF-terminated line. A final line
// without a trailing LF is still delivered.
inline void ForEachLine(
    const std::filesystem::path& path,
    const std::function<void(std::string_view, size_t)>& fn) {
  const std::string content = ReadFile(path);
  if (size_t bad = FindInvalidUtf8(content); bad != std::string::npos) {
    throw Error("core-model", path.string() + ": invalid UTF-8 at byte " +
                                  std::to_string(bad));
  }
  std::string_view rest = content;
  size_t line_no = 0;
  while (!rest.empty()) {
    ++line_no;
    size_t nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    fn(line, line_no);
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
}

[[noreturn]] inline void ThrowAtLine(const std::filesystem::path& path,
                                     size_t line_no, const std::string& what) {
  throw Error("core-model",
              path.string() + ":" + std::to_string(line_no) + ": " + what);
}

// Splits "<a>\t<b>" into two valid ids or reports the line.
inline std::pair<UserId, UserId> ParseIdPair(std::string_view line,
                                             const std::filesystem::path& path,
                                             size_t line_no) {
  const size_t tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) != line.npos) {
    ThrowAtLine(path, line_no, "expected exactly two tab-separated ids");
  }
  std::string_view a = line.substr(0, tab);
  std::string_view b = line.substr(tab + 1);
  if (!UserId::IsValid(a) || !UserId::IsValid(b)) {
    ThrowAtLine(path, line_no, "empty or malformed user id");
  }
  return {UserId(std::string(a)), UserId(std::string(b))};
}

inline void WriteFile(const std::filesystem::path& path,
                      const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out) throw Error("core-model", "cannot write " + path.string());
}

inline void EnsureDirectory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw Error("core-model",
                "cannot create directory " + dir.string() + ": " + ec.message());
  }
}

}  // namespace internal

// Input rows that were valid but redundant.
struct LoadStats {
  size_t duplicate_edges = 0;
  size_t self_loops = 0;
};

inline Dataset LoadDataset(const std::filesystem::path& edges_path,
                           const std::filesystem::path& posts_path,
                           std::string label, LoadStats* stats = nullptr) {
  Dataset dataset(std::move(label));
  LoadStats local;
  internal::ForEachLine(edges_path, [&](std::string_view line, size_t no) {
    auto [u, v] = internal::ParseIdPair(line, edges_path, no);
    if (u == v) {
      ++local.self_loops;  // dropped; the id is not a vertex on its own
    } else if (!dataset.AddEdge(u, v)) {
      ++local.duplicate_edges;
    }
  });
  internal::ForEachLine(posts_path, [&](std::string_view line, size_t no) {
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      internal::ThrowAtLine(posts_path, no, std::string("bad JSON: ") + e.what());
    }
    if (!obj.is_object() || obj.size() != 3) {
      internal::ThrowAtLine(posts_path, no,
                            "expected an object with keys user_id, post_id, text");
    }
    for (const char* key : {"user_id", "post_id", "text"}) {
      auto it = obj.find(key);
      if (it == obj.end() || !it->is_string()) {
        internal::ThrowAtLine(posts_path, no,
                              std::string("missing or non-string \"") + key + "\"");
      }
    }
    const auto user = obj["user_id"].get<std::string>();
    const auto post_id = obj["post_id"].get<std::string>();
    if (!UserId::IsValid(user)) {
      internal::ThrowAtLine(posts_path, no, "empty or malformed user_id");
    }
    try {
      dataset.AddPost(Post(post_id, UserId(user), obj["text"].get<std::string>()));
    } catch (const Error& e) {
      internal::ThrowAtLine(posts_path, no, e.what());
    }
  });
  if (stats) *stats = local;
  return dataset;
}

// Loads `<dir>/edges.tsv` and `<dir>/posts.jsonl`.
inline Dataset LoadDatasetDir(const std::filesystem::path& dir,
                              std::string label, LoadStats* stats = nullptr) {
  return LoadDataset(dir / kEdgesFile, dir / kPostsFile, std::move(label), stats);
}

// Writes edges.tsv (sorted edge list) and posts.jsonl (sorted by author, then
// post id) into `out_dir`, creating it if needed. Isolated vertices without
// posts have no representation in either file and are not written.
inline void SaveDataset(const Dataset& dataset,
                        const std::filesystem::path& out_dir) {
  internal::EnsureDirectory(out_dir);
  std::string edges;
  for (const auto& [u, v] : dataset.graph().Edges()) {
    edges += u.str();
    edges += '\t';
    edges += v.str();
    edges += '\n';
  }
  std::string posts;
  for (const auto& [author, list] : dataset.posts()) {
    for (const Post& p : list) {
      nlohmann::json obj = {{"user_id", author.str()},
                            {"post_id", p.post_id()},
                            {"text", p.text()}};
      posts += obj.dump();
      posts += '\n';
    }
  }
  internal::WriteFile(out_dir / kEdgesFile, edges);
  internal::WriteFile(out_dir / kPostsFile, posts);
}

inline GroundTruth LoadGroundTruth(const std::filesystem::path& path) {
  GroundTruth truth;
  internal::ForEachLine(path, [&](std::string_view line, size_t no) {
    auto [anon, real] = internal::ParseIdPair(line, path, no);
    try {
      truth.Add(anon, real);
    } catch (const Error& e) {
      internal::ThrowAtLine(path, no, e.what());
    }
  });
  return truth;
}

inline void SaveGroundTruth(const GroundTruth& truth,
                            const std::filesystem::path& path) {
  if (path.has_parent_path()) internal::EnsureDirectory(path.parent_path());
  std::string out;
  for (const auto& [anon, real] : truth.mapping()) {
    out += anon.str();
    out += '\t';
    out += real.str();
    out += '\n';
  }
  internal::WriteFile(path, out);
}

}  // namespace deanon

#endif  // DEANON_CORE_IO_HPP_
