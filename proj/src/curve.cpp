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

#include "hypercount/curve.hpp"

namespace hypercount {

CurveSpec make_curve(const Poly& f) {
  int d = f.degree();
  if (d < 3 || d % 2 == 0) fail(Errc::BadGenus, "f must have odd degree >= 3");
  if (!f.is_monic()) fail(Errc::InvalidArgument, "f must be monic");
  if (!is_squarefree(f)) fail(Errc::SingularCurve, "f is not squarefree");
  return CurveSpec{f.field(), f, (d - 1) / 2, std::nullopt};
}

CurveSpec curve_from_ab(int g, const Fe& a, const Fe& b) {
  if (g < 1 || g > 7) fail(Errc::BadGenus, "genus must be in 1..7");
  const Field& F = a.field();
  if (divides(F->p, g))
    fail(Errc::CharacteristicDividesGenus, "p divides g");
  if (b.is_zero()) fail(Errc::SingularCurve, "b = 0");
  Fe be = embed(b, F);
  std::vector<Fe> c(2 * g + 2, Fe::zero(F));
  c[2 * g + 1] = Fe::one(F);
  c[g + 1] = c[g + 1] + a;
  c[1] = c[1] + be;
  CurveSpec cs = make_curve(Poly(F, c));
  cs.family = std::make_pair(a, be);
  return cs;
}

CurveSpec base_change(const CurveSpec& c, const Field& ext) {
  CurveSpec r{ext, embed(c.f, ext), c.g, std::nullopt};
  if (c.family) r.family = std::make_pair(embed(c.family->first, ext), embed(c.family->second, ext));
  return r;
}

LPolynomial zeta_oracle(const CurveSpec& c, std::uint64_t budget) {
  return lpoly_from_counts(count_points_upto(c, c.g, budget), c.field->q);
}

}  // namespace hypercount
