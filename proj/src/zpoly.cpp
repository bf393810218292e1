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

#include <algorithm>

#include "hypercount/lpoly.hpp"

namespace hypercount {

ZPoly ztrim(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return ztrim(r);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return ztrim(r);
}

Int zeval(const ZPoly& a, const Int& x) {
  Int r = 0;
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

ZPoly zreverse(const ZPoly& a, int degree) {
  ZPoly r(degree + 1, 0);
  for (int i = 0; i <= degree && i < static_cast<int>(a.size()); ++i) r[degree - i] = a[i];
  return r;
}

std::string zstr(const ZPoly& a, const std::string& var) {
  std::string s;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] == 0) continue;
    Int c = a[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (c != 1 || i == 0) s += c.get_str();
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<Int> power_sums(const ZPoly& c, int n) {
  std::vector<Int> s(n + 1, 0);
  auto coef = [&](int j) -> Int { return j < static_cast<int>(c.size()) ? c[j] : Int(0); };
  for (int k = 1; k <= n; ++k) {
    Int v = -Int(k) * coef(k);
    for (int i = 1; i < k; ++i) v -= s[i] * coef(k - i);
    s[k] = v;
  }
  return std::vector<Int>(s.begin() + 1, s.end());
}

ZPoly coeffs_from_power_sums(const std::vector<Int>& s, int n) {
  ZPoly c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Int v = 0;
    for (int i = 1; i <= k; ++i) v += s[i - 1] * c[k - i];
    if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(k)))
      fail(Errc::MismatchDetected, "power sums are not those of an integer polynomial");
    c[k] = -v / k;
  }
  return c;
}

ZPoly LPolynomial::full() const {
  ZPoly c(2 * g + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= g; ++i) c[i] = a[i - 1];
  for (int i = 0; i < g; ++i) c[2 * g - i] = ipow(q, g - i) * c[i];
  return c;
}

ZPoly LPolynomial::chi() const { return zreverse(full(), 2 * g); }

Int LPolynomial::jacobian_order() const { return zeval(full(), 1); }

bool abs_le_sqrt_bound(const Int& a, const Int& c, const Int& q, int i) {
  return a * a <= c * c * ipow(q, i);
}

void sqrt_q_binomial(const Int& q, int n, Int& A, Int& B) {
  A = 0;
  B = 0;
  for (int j = 0; j <= n; ++j) {
    Int t = binomial(n, j);
    if (j % 2 == 0)
      A += t * ipow(q, j / 2);
    else
      B += t * ipow(q, j / 2);
  }
}

bool LPolynomial::satisfies_coefficient_bounds() const {
  for (int i = 1; i <= g; ++i)
    if (!abs_le_sqrt_bound(a[i - 1], binomial(2 * g, i), q, i)) return false;
  return true;
}

bool LPolynomial::satisfies_hasse_weil() const {
  Int N = jacobian_order();
  Int A, B;
  sqrt_q_binomial(q, 2 * g, A, B);
  // upper: N <= A + B sqrt(q)
  Int d = N - A;
  if (d > 0 && d * d > B * B * q) return false;
  // lower: N >= A - B sqrt(q)
  Int e = A - N;
  if (e > 0 && e * e > B * B * q) return false;
  return true;
}

std::string LPolynomial::to_string() const { return zstr(chi()); }

LPolynomial LPolynomial::from_full(const ZPoly& c, const Int& q, int g) {
  ZPoly padded = ztrim(c);
  if (static_cast<int>(padded.size()) > 2 * g + 1) fail(Errc::MismatchDetected, "degree exceeds 2g");
  padded.resize(2 * g + 1, 0);
  LPolynomial L{q, g, {}};
  for (int i = 1; i <= g; ++i) L.a.push_back(padded[i]);
  if (padded[0] != 1 || L.full() != padded)
    fail(Errc::MismatchDetected, "polynomial violates the functional equation");
  return L;
}

bool operator==(const LPolynomial& x, const LPolynomial& y) { return x.q == y.q && x.g == y.g && x.a == y.a; }

bool operator<(const LPolynomial& x, const LPolynomial& y) {
  if (x.q != y.q) return x.q < y.q;
  if (x.g != y.g) return x.g < y.g;
  return x.a < y.a;
}

LPolynomial lpoly_from_counts(const std::vector<Int>& counts, const Int& q) {
  const int g = static_cast<int>(counts.size());
  std::vector<Int> s(g);
  Int qk = 1;
  for (int k = 1; k <= g; ++k) {
    qk *= q;
    s[k - 1] = qk + 1 - counts[k - 1];
  }
  ZPoly c = coeffs_from_power_sums(s, g);
  LPolynomial L{q, g, {}};
  for (int i = 1; i <= g; ++i) L.a.push_back(c[i]);
  return L;
}

LPolynomial lpoly_product(const LPolynomial& x, const LPolynomial& y) {
  require(x.q == y.q, "lpoly_product: field sizes differ");
  ZPoly c = zmul(x.full(), y.full());
  return LPolynomial::from_full(c, x.q, x.g + y.g);
}

LPolynomial lpoly_twist(const LPolynomial& x, int sign) {
  LPolynomial r = x;
  if (sign < 0)
    for (int i = 1; i <= x.g; i += 2) r.a[i - 1] = -r.a[i - 1];
  return r;
}

}  // namespace hypercount
