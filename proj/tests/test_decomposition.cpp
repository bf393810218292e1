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

#include <optional>
#include <tuple>

#include "doctest.h"
#include "hypercount/decomposition.hpp"
#include "hypercount/descent.hpp"

using namespace hypercount;

namespace {

CurveSpec fam(long p, int g, long a, long b) {
  Field F = make_prime_field(Int(p));
  return curve_from_ab(g, Fe::from_int(F, a), Fe::from_int(F, b));
}

// Exact quotient of integer polynomials with constant term 1, or nullopt.
std::optional<ZPoly> series_divide(const ZPoly& n, const ZPoly& d) {
  const int deg = static_cast<int>(n.size()) - static_cast<int>(d.size());
  if (deg < 0) return std::nullopt;
  ZPoly q(deg + 1, 0);
  for (int i = 0; i <= deg; ++i) {
    Int v = n[i];
    for (int j = 1; j <= i && j < static_cast<int>(d.size()); ++j) v -= d[j] * q[i - j];
    q[i] = v;
  }
  if (zmul(q, d) != ztrim(n)) return std::nullopt;
  return q;
}

}  // namespace

TEST_CASE("L_C splits over the field generated by a root of b") {
  struct Row {
    long p;
    int g;
    long a, b;
  };
  for (Row r : {Row{7, 2, 1, 3}, Row{13, 2, 3, 5}, Row{11, 2, 2, 3}, Row{13, 3, 2, 5}, Row{7, 3, 1, 1}, Row{13, 3, 4, 8},
                Row{5, 4, 1, 1}, Row{13, 4, 2, 3}, Row{7, 4, 3, 6}}) {
    CAPTURE(r.p);
    CAPTURE(r.g);
    CurveSpec c = fam(r.p, r.g, r.a, r.b);
    DecompositionReport rep = decomposition_check(c);
    CHECK(rep.holds);
    CHECK(rep.LC == extend_lpoly(zeta_oracle(c), rep.degree));
    CHECK(rep.L1.g + rep.L2.g == r.g);
    CHECK(lpoly_product(rep.L1, rep.L2) == rep.LC);
  }
}

TEST_CASE("quotients of the normalized curve") {
  Field F = make_prime_field(Int(7));
  Fe c = Fe::from_int(F, 3);
  QuotientPair qp = quotients_of_Cprime(4, c);
  CHECK_FALSE(qp.extended);
  // (x + 2)(x^4 - 4x^2 + 2 + c) and (x - 2)(x^4 - 4x^2 + 2 + c).
  CHECK(qp.X1.f == Poly::from_ints(F, {Int(10), Int(5), Int(-8), Int(-4), Int(2), Int(1)}));
  CHECK(qp.X2.f == Poly::from_ints(F, {Int(-10), Int(5), Int(8), Int(-4), Int(-2), Int(1)}));
  QuotientPair odd = quotients_of_Cprime(3, c);
  CHECK(odd.X1.g == 1);
  CHECK(odd.X2.g == 2);
  CHECK(odd.X1.f == Poly::from_ints(F, {Int(3), Int(-3), Int(0), Int(1)}));
}

TEST_CASE("even genus over a quadratic extension when alpha is not a square") {
  Field F = make_prime_field(Int(7));
  QuotientPair qp = quotients_of_X(2, Fe::from_int(F, 2), Fe::from_int(F, 3));
  CHECK(qp.extended);
  CHECK(qp.defined_over->q == 49);
  CHECK(qp.X1.g == 1);
}

TEST_CASE("the elliptic quotient divides L_C for odd genus") {
  for (auto [p, g, a, b] : std::vector<std::tuple<long, int, long, long>>{
           {13, 3, 2, 5}, {11, 3, 3, 2}, {7, 3, 1, 1}, {11, 5, 2, 7}, {3, 7, 1, 2}}) {
    CAPTURE(p);
    CAPTURE(g);
    CurveSpec c = fam(p, g, a, b);
    CurveSpec E = elliptic_quotient(g, c.family->first, c.family->second);
    CHECK(E.g == 1);
    CHECK(series_divide(zeta_oracle(c).full(), zeta_oracle(E).full()).has_value());
  }
  Field F = make_prime_field(Int(7));
  try {
    elliptic_quotient(2, Fe::one(F), Fe::one(F));
    FAIL("expected EvenGenus");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EvenGenus);
  }
}

TEST_CASE("quotient twists lift to L_C") {
  // b = r^6 with r = 2, s = r^3 = 8; 2 is a non-residue mod 13, so L_C = L_{X1} L_{X2}(-T).
  CurveSpec c = fam(13, 3, 2, 12);
  Fe s = Fe::from_int(c.field, 8);
  QuotientPair tw = twist_curves_with_root(3, c.family->first, s);
  LPolynomial prod = lpoly_product(zeta_oracle(tw.X1), zeta_oracle(tw.X2));
  CHECK(lpoly_twist(prod, -1) == zeta_oracle(c));
}
