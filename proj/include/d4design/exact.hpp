/*
   Copyright 2026 The d4design Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <compare>

#include "d4design/common.hpp"

namespace d4design {

/// Integer 4-vector. Lattice points never exceed |x_i| <= sqrt(2m), so
/// 64-bit coordinates are exact for every reachable shell; the inner
/// product guards its own range. Comparison is lexicographic.
struct Vec4 {
  std::array<int64_t, 4> c{0, 0, 0, 0};

  Vec4() = default;
  Vec4(int64_t a, int64_t b, int64_t d, int64_t e) : c{a, b, d, e} {}

  int64_t operator[](int i) const { return c[static_cast<size_t>(i)]; }
  int64_t& operator[](int i) { return c[static_cast<size_t>(i)]; }

  auto operator<=>(const Vec4&) const = default;
};

inline Vec4 operator-(const Vec4& v) {
  return Vec4{-v.c[0], -v.c[1], -v.c[2], -v.c[3]};
}

/// Exact integer inner product; coordinates must stay below 2^30 so the
/// sum of four products cannot overflow.
int64_t vec_inner(const Vec4& x, const Vec4& y);

inline int64_t vec_norm(const Vec4& x) { return vec_inner(x, x); }

/// True when the first nonzero coordinate is positive (x > -x lexicographically).
bool lex_positive(const Vec4& x);

}  // namespace d4design
