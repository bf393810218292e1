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

#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <set>

#include "hypercount/counting.hpp"
#include "hypercount/realroots.hpp"

namespace hypercount {

namespace {

using Complex = boost::multiprecision::cpp_complex_100;

// Degrees of the irreducible factors of squarefree f over F_l.
std::vector<int> factor_degrees(Poly f) {
  std::vector<int> out;
  const Field& F = f.field();
  const Poly X = Poly::x(F);
  Poly h = X;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, F->p, f);
    Poly g = gcd(f, h - X);
    if (g.degree() > 0) {
      for (int i = 0; i < g.degree() / d; ++i) out.push_back(d);
      f = quo(f, g);
      h = rem(h, f);
    }
  }
  if (f.degree() > 0) out.push_back(f.degree());
  return out;
}

std::set<int> subset_sums(const std::vector<int>& d) {
  std::set<int> s{0};
  for (int x : d) {
    std::set<int> t = s;
    for (int y : s) t.insert(x + y);
    s = std::move(t);
  }
  return s;
}

bool divides_exactly(const ZPoly& f, const ZPoly& d) {
  ZPoly r = f;
  const size_t n = d.size() - 1;
  while (r.size() > n) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), d.back().get_mpz_t())) return false;
    Int c = r.back() / d.back();
    size_t shift = r.size() - 1 - n;
    for (size_t i = 0; i <= n; ++i) r[shift + i] -= c * d[i];
    r = ztrim(r);
    if (r.size() > n + shift) return false;
  }
  return ztrim(r).empty();
}

std::vector<Complex> durand_kerner(const ZPoly& f) {
  const size_t n = f.size() - 1;
  std::vector<Complex> c;
  for (const Int& x : f) c.emplace_back(to_real(x) / to_real(f.back()));
  auto ev = [&](const Complex& z) {
    Complex r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
  };
  std::vector<Complex> z(n);
  Complex seed(Real("0.4"), Real("0.9"));
  Real R = 1;
  for (size_t i = 0; i + 1 < c.size(); ++i) R = std::max(R, Real(1 + abs(c[i])));
  for (size_t i = 0; i < n; ++i) z[i] = R * pow(seed, static_cast<int>(i));
  for (int it = 0; it < 2000; ++it) {
    Real delta = 0;
    for (size_t i = 0; i < n; ++i) {
      Complex den = 1;
      for (size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      Complex step = ev(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, Real(abs(step)));
    }
    if (delta < Real("1e-80")) break;
  }
  return z;
}

}  // namespace

Irreducibility is_probably_irreducible(const ZPoly& chi) {
  ZPoly f = ztrim(chi);
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return Irreducibility::Inconclusive;
  if (n == 1) return Irreducibility::Irreducible;
  auto sqf = squarefree_decomposition(f);
  if (sqf.size() != 1 || sqf[0].second != 1) return Irreducibility::Reducible;
  std::set<int> possible;
  for (int d = 1; d < n; ++d) possible.insert(d);
  int used = 0;
  for (Int l = 3; used < 40 && l < 2000; l = next_prime(l)) {
    if (mod(f.back(), l) == 0) continue;
    Field Fl = make_prime_field(l);
    Poly fl = Poly::from_ints(Fl, f);
    if (!is_squarefree(fl)) continue;
    ++used;
    auto degs = factor_degrees(monic(fl));
    if (degs.size() == 1) return Irreducibility::Irreducible;
    std::set<int> s = subset_sums(degs), keep;
    for (int d : possible)
      if (s.count(d)) keep.insert(d);
    possible = std::move(keep);
    if (possible.empty()) return Irreducibility::Irreducible;
  }
  if (f.back() != 1) return Irreducibility::Inconclusive;
  // Monic: look for integer roots and monic integer quadratic factors among numeric roots.
  auto z = durand_kerner(f);
  for (const auto& r : z) {
    Int x = round_to_int(r.real());
    if (zeval(f, x) == 0) return Irreducibility::Reducible;
  }
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j) {
      Int s = round_to_int((z[i] + z[j]).real()), pr = round_to_int((z[i] * z[j]).real());
      if (divides_exactly(f, ZPoly{pr, -s, 1})) return Irreducibility::Reducible;
    }
  if (n <= 5) return Irreducibility::Irreducible;
  return Irreducibility::Inconclusive;
}

}  // namespace hypercount
