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

#include "d4design/common.hpp"

#include <cmath>

namespace d4design {

int64_t isqrt64(int64_t n) {
  require(n >= 0, "isqrt64: negative argument");
  if (n == 0) return 0;
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

mpz_class binom(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

mpz_class mpz_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  mpz_class hi = static_cast<unsigned long>(u >> 64);
  mpz_class r = (hi << 64) + static_cast<unsigned long>(u);
  return neg ? mpz_class(-r) : r;
}

std::string q_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

std::string z_str(const mpz_class& z) { return z.get_str(); }

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  require(q.get_den() != 0, "rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace d4design
