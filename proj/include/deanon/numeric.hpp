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

#ifndef DEANON_NUMERIC_HPP_
#define DEANON_NUMERIC_HPP_

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>

namespace deanon {

// Half-up rounding of a non-negative count.
inline size_t RoundHalfUp(double x) {
  return static_cast<size_t>(std::floor(x + 0.5));
}

// Fixed six-decimal rendering used by every TSV writer. Negative zero is
// printed as zero so equal values always render identically.
inline std::string Fixed6(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace deanon

#endif  // DEANON_NUMERIC_HPP_
