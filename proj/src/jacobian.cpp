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

bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }

MumfordDivisor jac_identity(const CurveSpec& c) {
  return {Poly::constant(Fe::one(c.field)), Poly(c.field)};
}

bool is_valid_divisor(const MumfordDivisor& d, const CurveSpec& c) {
  if (!d.u.is_monic() || d.u.degree() > c.g) return false;
  if (d.v.degree() >= d.u.degree()) return false;
  return rem(d.v * d.v - c.f, d.u).is_zero();
}

MumfordDivisor jac_neg(const MumfordDivisor& d, const CurveSpec& c) {
  (void)c;
  return {d.u, rem(-d.v, d.u)};
}

namespace {

MumfordDivisor reduce(Poly u, Poly v, const CurveSpec& c) {
  v = rem(v, u);
  while (u.degree() > c.g) {
    Poly u2 = quo(c.f - v * v, u);
    Poly v2 = rem(-v, u2);
    u = monic(u2);
    v = rem(v2, u);
  }
  return {monic(u), rem(v, u)};
}

}  // namespace

MumfordDivisor jac_add(const MumfordDivisor& d1, const MumfordDivisor& d2, const CurveSpec& c) {
  if (d1.is_identity()) return d2;
  if (d2.is_identity()) return d1;
  auto [g1, e1, e2] = xgcd(d1.u, d2.u);
  Poly u, v;
  if (g1.degree() == 0) {
    u = d1.u * d2.u;
    v = rem(e1 * d1.u * d2.v + e2 * d2.u * d1.v, u);
  } else {
    auto [d, c1, c2] = xgcd(g1, d1.v + d2.v);
    Poly s1 = c1 * e1, s2 = c1 * e2;
    u = quo(d1.u * d2.u, d * d);
    Poly num = s1 * d1.u * d2.v + s2 * d2.u * d1.v + c2 * (d1.v * d2.v + c.f);
    v = rem(quo(num, d), u);
  }
  return reduce(u, v, c);
}

MumfordDivisor jac_scalar_mul(const Int& n, const MumfordDivisor& d, const CurveSpec& c) {
  if (n < 0) return jac_scalar_mul(-n, jac_neg(d, c), c);
  MumfordDivisor r = jac_identity(c);
  if (n == 0) return r;
  size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = jac_add(r, r, c);
    if (mpz_tstbit(n.get_mpz_t(), i)) r = jac_add(r, d, c);
  }
  return r;
}

namespace {

// Square root of w in F_Q[x]/(u), u irreducible of degree d; size = Q^d.
std::optional<Poly> sqrt_mod(const Poly& w, const Poly& u, const Int& size, Rng& rng) {
  const Field& F = u.field();
  Poly one = Poly::constant(Fe::one(F));
  if (w.is_zero()) return w;
  Int half = (size - 1) / 2;
  if (powmod(w, half, u) != one) return std::nullopt;
  Int qm1 = size - 1;
  unsigned long s = mpz_scan1(qm1.get_mpz_t(), 0);
  Int t = qm1 >> s;
  Poly z;
  for (;;) {
    std::vector<Fe> c;
    for (int i = 0; i < u.degree(); ++i) c.push_back(random_element(F, rng));
    z = Poly(F, c);
    if (z.is_zero()) continue;
    if (powmod(z, half, u) != one) break;
  }
  Poly cc = powmod(z, t, u);
  Poly x = powmod(w, (t + 1) / 2, u);
  Poly b = powmod(w, t, u);
  unsigned long m = s;
  while (b != one) {
    unsigned long i = 0;
    Poly bb = b;
    while (bb != one) {
      bb = mulmod(bb, bb, u);
      ++i;
    }
    Poly ww = cc;
    for (unsigned long j = 0; j + 1 < m - i; ++j) ww = mulmod(ww, ww, u);
    x = mulmod(x, ww, u);
    cc = mulmod(ww, ww, u);
    b = mulmod(b, cc, u);
    m = i;
  }
  return x;
}

MumfordDivisor prime_divisor(const CurveSpec& c, Rng& rng) {
  const Field& F = c.field;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(c.g));
    std::vector<Fe> coef;
    for (int i = 0; i < d; ++i) coef.push_back(random_element(F, rng));
    coef.push_back(Fe::one(F));
    Poly u(F, coef);
    if (!is_irreducible(u)) continue;
    Poly w = rem(c.f, u);
    auto v = sqrt_mod(w, u, ipow(F->q, d), rng);
    if (!v) continue;
    return {u, rem(*v, u)};
  }
  fail(Errc::RetryLimit, "random divisor sampling exceeded 10000 attempts");
}

}  // namespace

MumfordDivisor random_divisor(const CurveSpec& c, std::uint64_t seed) {
  Rng rng(seed);
  MumfordDivisor a = prime_divisor(c, rng);
  MumfordDivisor b = prime_divisor(c, rng);
  return jac_add(a, b, c);
}

std::vector<MumfordDivisor> sample_divisors(const CurveSpec& c, int trials, std::uint64_t seed) {
  require(trials >= 1, "jacobian_order_check: trials must be >= 1");
  std::vector<MumfordDivisor> ds;
  for (int t = 0; t < trials; ++t)
    ds.push_back(random_divisor(c, seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(t)));
  return ds;
}

bool kills_all(const CurveSpec& c, const Int& N, const std::vector<MumfordDivisor>& ds) {
  if (N <= 0) return false;
  for (const auto& d : ds)
    if (!jac_scalar_mul(N, d, c).is_identity()) return false;
  return true;
}

bool jacobian_order_check(const CurveSpec& c, const Int& N, int trials, std::uint64_t seed) {
  require(N > 0, "jacobian_order_check: N must be positive");
  return kills_all(c, N, sample_divisors(c, trials, seed));
}

}  // namespace hypercount
