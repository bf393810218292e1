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

#include "hypercount/poly.hpp"

#include <algorithm>

namespace hypercount {

Poly::Poly(Field f, std::vector<Fe> c) : f_(std::move(f)), c_(std::move(c)) {
  for (auto& x : c_)
    if (x.field() != f_) x = embed(x, f_);
  trim();
}

Poly Poly::from_ints(const Field& f, const std::vector<Int>& c) {
  std::vector<Fe> v;
  v.reserve(c.size());
  for (const auto& x : c) v.push_back(Fe::from_int(f, x));
  return Poly(f, std::move(v));
}

Poly Poly::constant(const Fe& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Fe& c, int d) {
  std::vector<Fe> v(d + 1, Fe::zero(c.field()));
  v[d] = c;
  return Poly(c.field(), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Fe& Poly::lc() const {
  if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
  return c_.back();
}

Fe Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Fe::zero(f_);
  return c_[i];
}

void Poly::set_coeff(int i, const Fe& v) {
  if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, Fe::zero(f_));
  c_[i] = embed(v, f_);
  trim();
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Fe::zero(f_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Fe::zero(f_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return Poly(a.field()) - a; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  std::vector<Fe> r(a.degree() + b.degree() + 1, Fe::zero(a.field()));
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (size_t j = 0; j < bc.size(); ++j) r[i + j] += ac[i] * bc[j];
  }
  return Poly(a.field(), std::move(r));
}

Poly operator*(const Fe& s, const Poly& a) {
  std::vector<Fe> r = a.coeffs();
  for (auto& x : r) x *= s;
  return Poly(a.field(), std::move(r));
}

bool operator==(const Poly& a, const Poly& b) { return a.coeffs() == b.coeffs(); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Fe> r = a.coeffs();
  std::vector<Fe> q(a.degree() - b.degree() + 1, Fe::zero(f));
  Fe li = inv(b.lc());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    Fe t = r[i] * li;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * bc[j];
  }
  r.resize(db, Fe::zero(f));
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly quo(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly monic(const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return inv(a.lc()) * a;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Fe::one(f)), s1(f);
  Poly t0(f), t1 = Poly::constant(Fe::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly ns = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    Poly nt = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (!r0.is_zero() && !r0.is_monic()) {
    Fe li = inv(r0.lc());
    r0 = li * r0;
    s0 = li * s0;
    t0 = li * t0;
  }
  return {r0, s0, t0};
}

Poly derivative(const Poly& a) {
  if (a.degree() < 1) return Poly(a.field());
  std::vector<Fe> r;
  for (int i = 1; i <= a.degree(); ++i) r.push_back(Int(i) * a.coeffs()[i]);
  return Poly(a.field(), std::move(r));
}

Fe eval(const Poly& a, const Fe& x) {
  Fe xe = embed(x, a.field());
  Fe r = Fe::zero(a.field());
  for (int i = a.degree(); i >= 0; --i) r = r * xe + a.coeffs()[i];
  return r;
}

Poly compose(const Poly& a, const Poly& b) {
  Poly r(a.field());
  for (int i = a.degree(); i >= 0; --i) r = r * b + Poly::constant(a.coeffs()[i]);
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return rem(a * b, m); }

Poly powmod(const Poly& a, const Int& e, const Poly& m) {
  require(e >= 0, "powmod: negative exponent");
  Poly r = rem(Poly::constant(Fe::one(a.field())), m);
  Poly b = rem(a, m);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, b, m);
  }
  return r;
}

Poly embed(const Poly& a, const Field& target) {
  std::vector<Fe> c;
  for (const auto& x : a.coeffs()) c.push_back(embed(x, target));
  return Poly(target, std::move(c));
}

bool is_squarefree(const Poly& a) {
  if (a.degree() < 1) return true;
  Poly d = derivative(a);
  if (d.is_zero()) return false;
  return gcd(a, d).degree() == 0;
}

Fe resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) fail(Errc::ZeroPolynomial, "resultant of zero polynomial");
  const Field& F = f.field();
  Poly a = f, b = g;
  Fe acc = Fe::one(F);
  for (;;) {
    int da = a.degree(), db = b.degree();
    if (db == 0) return acc * pow(b.lc(), da);
    if (da == 0) return acc * pow(a.lc(), db);
    Poly r = rem(a, b);
    if (r.is_zero()) return Fe::zero(F);
    int dr = r.degree();
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    acc *= pow(b.lc(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> r;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      r.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) r.push_back(n);
  return r;
}

void split_roots(const Poly& g, Rng& rng, std::vector<Fe>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coeffs()[0] / g.coeffs()[1]));
    return;
  }
  const Field& F = g.field();
  Int e = (F->q - 1) / 2;
  for (int tries = 0; tries < 10000; ++tries) {
    Poly xa = Poly::x(F) + Poly::constant(random_element(F, rng));
    Poly h = powmod(xa, e, g) - Poly::constant(Fe::one(F));
    h = gcd(g, h);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_roots(h, rng, out);
      split_roots(quo(g, h), rng, out);
      return;
    }
  }
  fail(Errc::RetryLimit, "equal-degree splitting did not converge");
}

}  // namespace

bool is_irreducible(const Poly& f) {
  int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  Poly m = monic(f);
  const Field& F = f.field();
  Poly x = Poly::x(F);
  std::vector<Poly> xq{rem(x, m)};
  for (int j = 1; j <= n; ++j) xq.push_back(powmod(xq.back(), F->q, m));
  if (xq[n] != rem(x, m)) return false;
  for (int r : prime_divisors(n)) {
    Poly h = gcd(m, xq[n / r] - x);
    if (h.degree() != 0) return false;
  }
  return true;
}

std::vector<Fe> find_roots(const Poly& f, Rng& rng) {
  std::vector<Fe> out;
  if (f.degree() <= 0) return out;
  const Field& F = f.field();
  Poly m = monic(f);
  if (m.coeffs()[0].is_zero()) {
    out.push_back(Fe::zero(F));
    while (!m.is_zero() && m.coeffs()[0].is_zero()) m = quo(m, Poly::x(F));
  }
  if (m.degree() > 0) {
    Poly xq = powmod(Poly::x(F), F->q, m);
    Poly g = gcd(m, xq - Poly::x(F));
    split_roots(g, rng, out);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Fe> roots_in_prime_field(const Poly& f, const Int& l, std::uint64_t seed) {
  if (f.field()->k != 1 || f.field()->p != l) fail(Errc::NotPrimeField, "polynomial must be over F_l");
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "roots of zero polynomial");
  Rng rng(seed);
  return find_roots(f, rng);
}

Poly dickson(int n, const Fe& alpha) {
  require(n >= 0, "dickson: negative degree");
  const Field& F = alpha.field();
  Poly d0 = Poly::constant(Fe::from_int(F, 2));
  if (n == 0) return d0;
  Poly d1 = Poly::x(F);
  for (int i = 2; i <= n; ++i) {
    Poly d2 = Poly::x(F) * d1 - alpha * d0;
    d0 = std::move(d1);
    d1 = std::move(d2);
  }
  return d1;
}

Fe legendre_eval(long m, const Fe& x) {
  require(m >= 0, "legendre_eval: negative index");
  const Field& F = x.field();
  if (m > 0 && Int(m) >= F->p)
    fail(Errc::IndexTooLargeForCharacteristic, "P_" + std::to_string(m) + " needs p > m");
  Fe p0 = Fe::one(F);
  if (m == 0) return p0;
  Fe p1 = x;
  for (long n = 2; n <= m; ++n) {
    Fe ninv = inv(Fe::from_int(F, n));
    Fe p2 = (Int(2 * n - 1) * (x * p1) - Int(n - 1) * p0) * ninv;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

Poly legendre_coeff_oracle(int m, const Field& f) {
  require(m >= 0 && m <= 64, "legendre_coeff_oracle: 0 <= m <= 64");
  // 2^m P_m(x) = sum_k C(m,k)^2 (x-1)^(m-k) (x+1)^k over Z.
  auto binom = [](int n, int k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  };
  auto expand = [&](int e, int sign) {
    std::vector<Int> c(e + 1);
    for (int i = 0; i <= e; ++i) c[i] = binom(e, i) * ((e - i) % 2 && sign < 0 ? -1 : 1);
    return c;
  };
  std::vector<Int> acc(m + 1, 0);
  for (int k = 0; k <= m; ++k) {
    auto a = expand(m - k, -1), b = expand(k, 1);
    Int w = binom(m, k) * binom(m, k);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) acc[i + j] += w * a[i] * b[j];
  }
  Fe scale = inv(pow(Fe::from_int(f, 2), m));
  std::vector<Fe> c;
  for (const auto& x : acc) c.push_back(Fe::from_int(f, x) * scale);
  return Poly(f, std::move(c));
}

}  // namespace hypercount
