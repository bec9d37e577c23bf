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

#ifndef DEANON_ERROR_HPP_
#define DEANON_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace deanon {

// Domain error raised by every library module. `module()` names the module
// that detected the problem so the CLI can report "<module>: <cause>".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& message)
      : std::runtime_error(module + ": " + message), module_(std::move(module)) {}

  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

// Lookup of an identifier the callee does not know about.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// The per-run platform query budget has been spent.
class QueryBudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace deanon

#endif  // DEANON_ERROR_HPP_
