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

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hypercount/curve.hpp"

namespace hypercount {

struct Candidate {
  LPolynomial L;
  std::string note;
};

struct CandidateSet {
  Int q;
  int g = 0;
  std::vector<Candidate> items;

  bool unique() const { return items.size() == 1; }
  std::vector<LPolynomial> polys() const;
};

// L over F_{q^k} from L over F_q.
LPolynomial extend_lpoly(const LPolynomial& L, int k);

// L_{X1} L_{X2} over F_{q^k} for the genus-2 twist pair with
// L_{X1} = 1 + b1k T + b2k T^2 + ...; X2 is X1 when sqrt(-1) exists, else its quadratic twist.
LPolynomial genus2_twist_combine(const Int& b1k, const Int& b2k, const Int& qk, bool minus_one_square);

// All (b1, b2) mod p with b2^2 = b22 and b1^2 = b12 + 2 b2.
std::vector<std::pair<Fe, Fe>> genus3_descend_mod_p(const Fe& b12, const Fe& b22);

// Coefficients c0, c2, ..., c14 of the degree-16 even polynomial satisfied by a1.
std::array<Int, 8> appendix_a_coeffs(const Int& a12, const Int& a22, const Int& a32, const Int& a42, const Int& q);

// Genus-4 L over F_q from L2 over F_{q^2}. When curve is given, candidates are
// eliminated with jacobian_order_check on it (curve over F_q).
CandidateSet genus4_descend(const LPolynomial& L2, const Int& q, const CurveSpec* curve = nullptr, int trials = 12,
                            std::uint64_t seed = kDefaultSeed);

// Drops candidates violating the coefficient bounds or Hasse-Weil; EmptyAfterFilter if none remain.
CandidateSet weil_filter(const CandidateSet& cands);

// All inverse roots of L have absolute value sqrt(q): the real Weil polynomial
// has only real roots in [-2 sqrt(q), 2 sqrt(q)].
bool is_weil_polynomial(const LPolynomial& L);

// Keeps candidates whose L(1) kills random divisors of curve; NoCandidateSurvives if none remain.
CandidateSet jacobian_eliminate(const CandidateSet& cands, const CurveSpec& curve, int trials, std::uint64_t seed);

// While several candidates remain, repeats the order check on curve over
// F_{q^k}, k = 2..max_degree, using extend_lpoly(L, k)(1). Never removes all candidates.
CandidateSet refine_over_extensions(const CandidateSet& cands, const CurveSpec& curve, int trials, std::uint64_t seed,
                                    int max_degree = 2);

// All L over F_{q^(n/kj)} with extend_lpoly(L, kj) = Lnk, optionally eliminated against curve.
CandidateSet generic_descend(const LPolynomial& Lnk, int kj, const CurveSpec* curve = nullptr, int trials = 12,
                             std::uint64_t seed = kDefaultSeed);

}  // namespace hypercount
