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

#include <utility>
#include <vector>

#include "hypercount/field.hpp"

namespace hypercount {

// Dense univariate polynomial over a field, ascending coefficients, no
// trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(std::move(f)) {}
  Poly(Field f, std::vector<Fe> c);
  static Poly from_ints(const Field& f, const std::vector<Int>& c);
  static Poly constant(const Fe& c);
  static Poly monomial(const Fe& c, int d);
  static Poly x(const Field& f) { return monomial(Fe::one(f), 1); }

  const Field& field() const { return f_; }
  const std::vector<Fe>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  const Fe& lc() const;
  Fe coeff(int i) const;
  void set_coeff(int i, const Fe& v);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

 private:
  void trim();
  Field f_;
  std::vector<Fe> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Fe& s, const Poly& a);
bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly quo(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g, s, t;  // g = s a + t b, g monic
};
Xgcd xgcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& a);
Fe eval(const Poly& a, const Fe& x);
Poly compose(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, const Int& e, const Poly& m);
Poly embed(const Poly& a, const Field& target);
bool is_squarefree(const Poly& a);

Fe resultant(const Poly& f, const Poly& g);
bool is_irreducible(const Poly& f);
// Distinct roots in f's field, ascending by canonical rank.
std::vector<Fe> find_roots(const Poly& f, Rng& rng);
std::vector<Fe> roots_in_prime_field(const Poly& f, const Int& l, std::uint64_t seed = kDefaultSeed);

// D_n(x, alpha) with D_0 = 2, D_1 = x, D_n = x D_{n-1} - alpha D_{n-2}.
Poly dickson(int n, const Fe& alpha);
Fe legendre_eval(long m, const Fe& x);
Poly legendre_coeff_oracle(int m, const Field& f);

}  // namespace hypercount
