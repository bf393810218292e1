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

#include "hypercount/curve.hpp"

namespace hypercount {

enum class Relation { Sigma, OmegaSigma };

// X1 is the sigma-quotient, X2 the (omega sigma)-quotient.
struct QuotientPair {
  CurveSpec X1, X2;
  Field defined_over;
  bool extended = false;  // built over a quadratic extension to reach sqrt(alpha)
};

// Quotients of C': y^2 = x^(2g+1) + c x^(g+1) + x.
QuotientPair quotients_of_Cprime(int g, const Fe& c);
// Quotients of X: y^2 = x^(g+1) (D_g(x + alpha/x, alpha) + a).
QuotientPair quotients_of_X(int g, const Fe& a, const Fe& alpha);
// Twists built from a / sqrt(b) over F_q[sqrt(b)].
QuotientPair twist_curves(int g, const Fe& a, const Fe& b);
// Same, for a chosen square root s of b.
QuotientPair twist_curves_with_root(int g, const Fe& a, const Fe& s);
// E: y^2 = x^3 + a x^2 + b x, the image of (x, y) -> (x^g, y x^((g-1)/2)).
CurveSpec elliptic_quotient(int g, const Fe& a, const Fe& b);

struct DecompositionReport {
  Field splitting_field;
  int degree = 1;  // [splitting field : F_q]
  CurveSpec X1, X2;
  LPolynomial LC, L1, L2;
  bool holds = false;
};

DecompositionReport decomposition_check(const CurveSpec& c, std::uint64_t budget = kDefaultBudget);

}  // namespace hypercount
