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

#include <cstdint>
#include <optional>
#include <utility>

#include "hypercount/lpoly.hpp"
#include "hypercount/poly.hpp"

namespace hypercount {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// y^2 = f(x), f monic squarefree of degree 2g + 1.
struct CurveSpec {
  Field field;
  Poly f;
  int g = 0;
  std::optional<std::pair<Fe, Fe>> family;  // (a, b) when f = x^(2g+1) + a x^(g+1) + b x
};

CurveSpec make_curve(const Poly& f);
CurveSpec curve_from_ab(int g, const Fe& a, const Fe& b);
CurveSpec base_change(const CurveSpec& c, const Field& ext);

// #C(F_{q^k}) for the odd-degree model (one point at infinity).
Int count_points(const CurveSpec& c, int k, std::uint64_t budget = kDefaultBudget);
// #C(F_{q^k}) for k = 1..n.
std::vector<Int> count_points_upto(const CurveSpec& c, int n, std::uint64_t budget = kDefaultBudget);
LPolynomial zeta_oracle(const CurveSpec& c, std::uint64_t budget = kDefaultBudget);

// Reduced divisor in Mumford form; identity is (1, 0).
struct MumfordDivisor {
  Poly u, v;
  bool is_identity() const { return u.degree() == 0; }
};
bool operator==(const MumfordDivisor& a, const MumfordDivisor& b);

MumfordDivisor jac_identity(const CurveSpec& c);
bool is_valid_divisor(const MumfordDivisor& d, const CurveSpec& c);
MumfordDivisor jac_neg(const MumfordDivisor& d, const CurveSpec& c);
MumfordDivisor jac_add(const MumfordDivisor& d1, const MumfordDivisor& d2, const CurveSpec& c);
MumfordDivisor jac_scalar_mul(const Int& n, const MumfordDivisor& d, const CurveSpec& c);
MumfordDivisor random_divisor(const CurveSpec& c, std::uint64_t seed);
// Divisors used by jacobian_order_check for (trials, seed).
std::vector<MumfordDivisor> sample_divisors(const CurveSpec& c, int trials, std::uint64_t seed);
bool kills_all(const CurveSpec& c, const Int& N, const std::vector<MumfordDivisor>& ds);
bool jacobian_order_check(const CurveSpec& c, const Int& N, int trials, std::uint64_t seed);

}  // namespace hypercount
