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

#include "d4design/exact.hpp"

namespace d4design {

namespace {
constexpr int64_t kCoordBound = int64_t{1} << 30;
}

int64_t vec_inner(const Vec4& x, const Vec4& y) {
  int64_t s = 0;
  for (int i = 0; i < 4; ++i) {
    require(x[i] > -kCoordBound && x[i] < kCoordBound &&
                y[i] > -kCoordBound && y[i] < kCoordBound,
            "vec_inner: coordinate out of exact 64-bit range");
    s += x[i] * y[i];
  }
  return s;
}

bool lex_positive(const Vec4& x) {
  for (int i = 0; i < 4; ++i) {
    if (x[i] != 0) return x[i] > 0;
  }
  return false;
}

}  // namespace d4design
