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

#include "hypercount/decomposition.hpp"

#include "hypercount/descent.hpp"

namespace hypercount {

namespace {

void check_char(int g, const Field& F) {
  require(g >= 1, "genus must be positive");
  if (divides(F->p, g))
    fail(Errc::CharacteristicDividesGenus, "p divides g");
}

Poly linear(const Fe& c) { return Poly::x(c.field()) + Poly::constant(c); }

}  // namespace

QuotientPair quotients_of_X(int g, const Fe& a, const Fe& alpha) {
  const Field& F0 = alpha.field();
  check_char(g, F0);
  if (alpha.is_zero()) fail(Errc::SingularCurve, "alpha = 0");
  if (g % 2 == 1) {
    Poly h = dickson(g, alpha) + Poly::constant(embed(a, F0));
    Poly x2 = Poly::monomial(Fe::one(F0), 2) - Poly::constant(Int(4) * alpha);
    return {make_curve(h), make_curve(x2 * h), F0, false};
  }
  Field F = F0;
  auto r = sqrt(alpha);
  bool ext = false;
  if (!r) {
    F = make_extension(F0, 2);
    r = sqrt(embed(alpha, F));
    ext = true;
  }
  if (!r) fail(Errc::RootUnavailable, "sqrt(alpha) not found in the quadratic extension");
  Fe al = embed(alpha, F);
  Poly h = dickson(g, al) + Poly::constant(embed(a, F));
  return {make_curve(linear(Int(2) * *r) * h), make_curve(linear(Int(-2) * *r) * h), F, ext};
}

QuotientPair quotients_of_Cprime(int g, const Fe& c) { return quotients_of_X(g, c, Fe::one(c.field())); }

QuotientPair twist_curves_with_root(int g, const Fe& a, const Fe& s) {
  Fe as = embed(a, s.field()) / s;
  return quotients_of_Cprime(g, as);
}

QuotientPair twist_curves(int g, const Fe& a, const Fe& b) {
  if (b.is_zero()) fail(Errc::SingularCurve, "b = 0");
  auto s = sqrt(b);
  if (s) return twist_curves_with_root(g, a, *s);
  Field E = make_extension(b.field(), 2);
  s = sqrt(embed(b, E));
  if (!s) fail(Errc::RootUnavailable, "sqrt(b) not found in the quadratic extension");
  QuotientPair qp = twist_curves_with_root(g, a, *s);
  qp.extended = true;
  return qp;
}

CurveSpec elliptic_quotient(int g, const Fe& a, const Fe& b) {
  if (g % 2 == 0) fail(Errc::EvenGenus, "the elliptic quotient needs odd g");
  return curve_from_ab(1, a, b);
}

DecompositionReport decomposition_check(const CurveSpec& c, std::uint64_t budget) {
  if (!c.family) fail(Errc::InvalidArgument, "decomposition_check needs a family curve");
  const int g = c.g;
  check_char(g, c.field);
  const auto& [a, b] = *c.family;
  const int m = g % 2 == 1 ? g : 2 * g;
  const int K = nth_root_field_degree(b, m);
  Field E = K == 1 ? c.field : make_extension(c.field, K);
  Fe r = nth_root(b, m, E);
  Fe alpha = g % 2 == 1 ? r : r * r;
  QuotientPair qp = quotients_of_X(g, embed(a, E), alpha);
  DecompositionReport rep;
  rep.splitting_field = E;
  rep.degree = K;
  rep.X1 = qp.X1;
  rep.X2 = qp.X2;
  rep.LC = extend_lpoly(zeta_oracle(c, budget), K);
  rep.L1 = zeta_oracle(qp.X1, budget);
  rep.L2 = zeta_oracle(qp.X2, budget);
  rep.holds = rep.L1.q == rep.LC.q && lpoly_product(rep.L1, rep.L2) == rep.LC;
  if (!rep.holds)
    fail(Errc::MismatchDetected, "L_C != L_X1 L_X2 over the splitting field: " + rep.LC.to_string() + " vs " +
                                     rep.L1.to_string() + " * " + rep.L2.to_string());
  return rep;
}

}  // namespace hypercount
