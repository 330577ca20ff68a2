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

#include "d4design/unipoly.hpp"

#include <sstream>

namespace d4design {

UniPoly::UniPoly(std::initializer_list<mpq_class> coeffs)
    : c_(coeffs) {
  trim();
}

UniPoly::UniPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::constant(const mpq_class& c) {
  UniPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

UniPoly UniPoly::monomial(int degree, const mpq_class& c) {
  require(degree >= 0, "UniPoly::monomial: negative degree");
  UniPoly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(degree) + 1, mpq_class(0));
    p.c_.back() = c;
  }
  return p;
}

mpq_class UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<size_t>(i)];
}

const mpq_class& UniPoly::leading() const {
  require(!c_.empty(), "UniPoly::leading on zero polynomial");
  return c_.back();
}

mpq_class UniPoly::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const mpq_class& s, const UniPoly& a) {
  if (s == 0) return UniPoly();
  UniPoly r = a;
  for (auto& q : r.c_) q *= s;
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& q = c_[static_cast<size_t>(i)];
    if (q == 0) continue;
    if (!first) os << (q > 0 ? " + " : " - ");
    mpq_class a = (!first && q < 0) ? mpq_class(-q) : q;
    first = false;
    if (i == 0) {
      os << q_str(a);
    } else {
      if (a != 1) os << q_str(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace d4design
