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

#include "hypercount/realroots.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

namespace hypercount {

namespace {

using QPoly = std::vector<mpq_class>;

QPoly qtrim(QPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

QPoly to_q(const ZPoly& a) { return qtrim(QPoly(a.begin(), a.end())); }

QPoly qderiv(const QPoly& a) {
  QPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  return qtrim(r);
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1, 0);
  for (size_t i = a.size() - 1;; --i) {
    mpq_class c = a[i] / b.back();
    q[i - b.size() + 1] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] -= c * b[j];
    if (i == b.size() - 1) break;
  }
  return {qtrim(q), qtrim(a)};
}

QPoly qmonic(QPoly a) {
  mpq_class l = a.back();
  for (auto& x : a) x /= l;
  return a;
}

QPoly qgcd(QPoly a, QPoly b) {
  a = qtrim(a);
  b = qtrim(b);
  while (!b.empty()) {
    QPoly r = qdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : qmonic(a);
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return qtrim(r);
}

ZPoly primitive(const QPoly& a) {
  Int den = 1;
  for (const auto& x : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  ZPoly z;
  for (const auto& x : a) z.push_back(Int(x * den));
  Int g = 0;
  for (const auto& x : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g != 0)
    for (auto& x : z) x /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& x : z) x = -x;
  return z;
}

Real eval(const std::vector<Real>& c, const Real& x) {
  Real r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

int sign(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Real bisect(const std::vector<Real>& c, Real lo, Real hi) {
  int slo = sign(eval(c, lo));
  if (slo == 0) return lo;
  if (sign(eval(c, hi)) == 0) return hi;
  for (int it = 0; it < 400; ++it) {
    Real mid = (lo + hi) / 2;
    int s = sign(eval(c, mid));
    if (s == 0) return mid;
    if (s == slo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

std::vector<Real> roots_rec(const std::vector<Real>& c, const Real& B) {
  const size_t d = c.size() - 1;
  if (d == 0) return {};
  if (d == 1) return {-c[0] / c[1]};
  std::vector<Real> dc;
  for (size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<long>(i));
  std::vector<Real> crit = roots_rec(dc, B);
  std::vector<Real> pts;
  pts.push_back(-B);
  pts.insert(pts.end(), crit.begin(), crit.end());
  pts.push_back(B);
  std::vector<Real> out;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    int s1 = sign(eval(c, pts[i])), s2 = sign(eval(c, pts[i + 1]));
    if (s1 == 0 && i > 0) continue;
    if (s1 * s2 <= 0) out.push_back(bisect(c, pts[i], pts[i + 1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Real to_real(const Int& x) { return Real(x.get_str()); }

Int round_to_int(const Real& x) {
  boost::multiprecision::cpp_int r = boost::multiprecision::round(x).convert_to<boost::multiprecision::cpp_int>();
  return Int(r.str());
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& h) {
  QPoly f = to_q(h);
  require(f.size() >= 2, "squarefree_decomposition: constant polynomial");
  std::vector<std::pair<ZPoly, int>> out;
  QPoly df = qderiv(f);
  QPoly a = qgcd(f, df);
  QPoly b = qdivmod(f, a).first;
  QPoly c = qdivmod(df, a).first;
  QPoly d = qsub(c, qderiv(b));
  for (int i = 1; b.size() > 1; ++i) {
    QPoly ai = qgcd(b, d);
    if (ai.size() > 1) out.emplace_back(primitive(ai), i);
    b = qdivmod(b, ai).first;
    c = qdivmod(d, ai).first;
    d = qsub(c, qderiv(b));
  }
  return out;
}

std::vector<Real> real_roots(const ZPoly& h) {
  ZPoly z = ztrim(h);
  require(z.size() >= 1, "real_roots: zero polynomial");
  std::vector<Real> c;
  for (const auto& x : z) c.push_back(to_real(x));
  // Cauchy bound.
  Real B = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) B = std::max(B, Real(abs(c[i] / c.back())));
  B += 1;
  return roots_rec(c, B);
}

}  // namespace hypercount
