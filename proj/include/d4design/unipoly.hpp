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

#include <initializer_list>
#include <string>
#include <vector>

#include "d4design/common.hpp"

namespace d4design {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first. The leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<mpq_class> coeffs_low_first);
  explicit UniPoly(std::vector<mpq_class> coeffs_low_first);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const mpq_class& c);
  static UniPoly monomial(int degree, const mpq_class& c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  mpq_class coeff(int i) const;
  const mpq_class& leading() const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  mpq_class eval(const mpq_class& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const mpq_class& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace d4design
