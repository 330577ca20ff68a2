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

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace d4design {

/// Thrown when an exact identity that the library promises to verify fails.
/// The message names the identity that did not hold.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline void verify_identity(bool cond, const std::string& name) {
  if (!cond) throw VerificationError("exact identity failed: " + name);
}

/// Floor of sqrt(n) for n >= 0, exact.
int64_t isqrt64(int64_t n);

/// Binomial coefficient; zero when k < 0 or k > n.
mpz_class binom(long n, long k);

mpz_class mpz_from_i128(__int128 v);

/// Decimal rendering: "p" when the denominator is 1, otherwise "p/q".
std::string q_str(const mpq_class& q);
std::string z_str(const mpz_class& z);

/// Parses "p" or "p/q" into a canonical rational. Rejects malformed input
/// and zero denominators.
mpq_class parse_rational(const std::string& text);

}  // namespace d4design
