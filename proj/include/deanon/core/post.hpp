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

#ifndef DEANON_CORE_POST_HPP_
#define DEANON_CORE_POST_HPP_

#include <string>
#include <utility>
#include <vector>

#include "deanon/core/tokenize.hpp"
#include "deanon/core/user_id.hpp"

namespace deanon {

// A single post. The token list is derived from the text at construction and
// cannot drift from it.
class Post {
 public:
  Post(std::string post_id, UserId author, std::string text)
      : post_id_(std::move(post_id)),
        author_(std::move(author)),
        text_(std::move(text)),
        tokens_(Tokenize(text_)) {
    if (post_id_.empty() || post_id_.find_first_of("\t\n\r") != post_id_.npos) {
      throw Error("core-model", "invalid post id '" + post_id_ + "'");
    }
  }

  const std::string& post_id() const { return post_id_; }
  const UserId& author() const { return author_; }
  const std::string& text() const { return text_; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  // Same post with new content; the text becomes the space-joined tokens.
  Post WithTokens(const std::vector<std::string>& tokens) const {
    return Post(post_id_, author_, JoinTokens(tokens));
  }

  Post WithIdentity(std::string post_id, UserId author) const {
    Post copy = *this;
    copy.post_id_ = std::move(post_id);
    copy.author_ = std::move(author);
    return copy;
  }

  friend bool operator==(const Post& a, const Post& b) {
    return a.post_id_ == b.post_id_ && a.author_ == b.author_ &&
           a.text_ == b.text_;
  }

 private:
  std::string post_id_;
  UserId author_;
  std::string text_;
  std::vector<std::string> tokens_;
};

}  // namespace deanon

#endif  // DEANON_CORE_POST_HPP_
