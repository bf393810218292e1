/* Copyright 2026 The hypercount Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <string>
#include <vector>

#include "hypercount/field.hpp"

namespace hypercount {

// Integer polynomial, ascending coefficients.
using ZPoly = std::vector<Int>;

ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly ztrim(ZPoly a);
Int zeval(const ZPoly& a, const Int& x);
ZPoly zreverse(const ZPoly& a, int degree);
std::string zstr(const ZPoly& a, const std::string& var = "T");
Int binomial(unsigned long n, unsigned long k);

// s_1..s_n of the inverse roots of a polynomial with constant term 1.
std::vector<Int> power_sums(const ZPoly& c, int n);
// c_0..c_n from power sums s_1..s_n (c_0 = 1); exact divisions.
ZPoly coeffs_from_power_sums(const std::vector<Int>& s, int n);

// L(T) = 1 + a_1 T + ... + a_g T^g + q a_{g-1} T^{g+1} + ... + q^g T^{2g}.
struct LPolynomial {
  Int q;
  int g = 0;
  std::vector<Int> a;

  ZPoly full() const;
  // chi(T) = T^{2g} L(1/T), ascending.
  ZPoly chi() const;
  Int jacobian_order() const;
  bool satisfies_coefficient_bounds() const;
  bool satisfies_hasse_weil() const;
  bool satisfies_weil() const { return satisfies_coefficient_bounds() && satisfies_hasse_weil(); }
  std::string to_string() const;
  static LPolynomial from_full(const ZPoly& c, const Int& q, int g);
};

bool operator==(const LPolynomial& x, const LPolynomial& y);
inline bool operator!=(const LPolynomial& x, const LPolynomial& y) { return !(x == y); }
bool operator<(const LPolynomial& x, const LPolynomial& y);

LPolynomial lpoly_from_counts(const std::vector<Int>& counts, const Int& q);
LPolynomial lpoly_product(const LPolynomial& x, const LPolynomial& y);
// L(sign T): a_i -> sign^i a_i.
LPolynomial lpoly_twist(const LPolynomial& x, int sign);

// a^2 <= c^2 q^i, i.e. |a| <= c q^{i/2}.
bool abs_le_sqrt_bound(const Int& a, const Int& c, const Int& q, int i);
// (sqrt(q) + sign)^n = A + sign' B sqrt(q) split into integer parts.
void sqrt_q_binomial(const Int& q, int n, Int& A, Int& B);

}  // namespace hypercount
