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
#include <set>

#include "hypercount/descent.hpp"
#include "hypercount/realroots.hpp"

namespace hypercount {

std::vector<LPolynomial> CandidateSet::polys() const {
  std::vector<LPolynomial> r;
  for (const auto& c : items) r.push_back(c.L);
  return r;
}

LPolynomial extend_lpoly(const LPolynomial& L, int k) {
  require(k >= 1, "extend_lpoly: k must be >= 1");
  if (k == 1) return L;
  std::vector<Int> s = power_sums(L.full(), L.g * k);
  std::vector<Int> sk;
  for (int j = 1; j <= L.g; ++j) sk.push_back(s[j * k - 1]);
  ZPoly c = coeffs_from_power_sums(sk, L.g);
  LPolynomial r{ipow(L.q, k), L.g, {}};
  for (int i = 1; i <= L.g; ++i) r.a.push_back(c[i]);
  return r;
}

LPolynomial genus2_twist_combine(const Int& b1k, const Int& b2k, const Int& qk, bool minus_one_square) {
  LPolynomial r{qk, 4, {}};
  if (minus_one_square)
    r.a = {2 * b1k, 2 * b2k + b1k * b1k, 2 * b1k * qk + 2 * b1k * b2k, 2 * qk * qk + 2 * b1k * b1k * qk + b2k * b2k};
  else
    r.a = {0, 2 * b2k - b1k * b1k, 0, 2 * qk * qk - 2 * b1k * b1k * qk + b2k * b2k};
  return r;
}

std::vector<std::pair<Fe, Fe>> genus3_descend_mod_p(const Fe& b12, const Fe& b22) {
  if (b12.field()->k != 1) fail(Errc::NotPrimeField, "genus3_descend_mod_p works over F_p");
  std::vector<std::pair<Fe, Fe>> out;
  auto push = [&](const Fe& x, const Fe& y) {
    for (const auto& [u, v] : out)
      if (u == x && v == y) return;
    out.emplace_back(x, y);
  };
  auto r2 = sqrt(b22);
  if (r2) {
    for (const Fe& b2 : {*r2, -*r2}) {
      auto r1 = sqrt(b12 + Int(2) * b2);
      if (!r1) continue;
      push(*r1, b2);
      push(-*r1, b2);
    }
  }
  if (out.empty()) fail(Errc::NoSolution, "no (b1, b2) maps to the given extension coefficients");
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first.to_int() < y.first.to_int();
    return x.second.to_int() < y.second.to_int();
  });
  return out;
}

std::array<Int, 8> appendix_a_coeffs(const Int& A1, const Int& A2, const Int& A3, const Int& A4, const Int& q) {
  const Int q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q, q6 = q5 * q, q7 = q6 * q;
  const Int A1_2 = A1 * A1, A1_3 = A1_2 * A1, A1_4 = A1_3 * A1, A1_5 = A1_4 * A1, A1_6 = A1_5 * A1, A1_7 = A1_6 * A1;
  const Int A2_2 = A2 * A2, A2_3 = A2_2 * A2;
  std::array<Int, 8> c;
  Int b = 128 * q4 - 128 * A1 * q3 + 32 * A1_2 * q2 + 128 * A3 * q - 64 * A1 * A2 * q + 16 * A1_3 * q - 64 * A4 +
          16 * A2_2 - 8 * A1_2 * A2 + A1_4;
  c[0] = b * b;
  c[1] = -131072 * q7 + 163840 * A1 * q6 - 32768 * A2 * q5 - 65536 * A1_2 * q5 - 81920 * A3 * q4 +
         45056 * A1 * A2 * q4 + 5120 * A1_3 * q4 + 65536 * A4 * q3 + 49152 * A1 * A3 * q3 - 16384 * A2_2 * q3 -
         12288 * A1_2 * A2 * q3 + 2048 * A1_4 * q3 - 49152 * A1 * A4 * q2 + 4096 * A1_2 * A3 * q2 +
         8192 * A1 * A2_2 * q2 - 5120 * A1_3 * A2 * q2 + 768 * A1_5 * q2 + 16384 * A2 * A4 * q - 16384 * A3 * A3 * q +
         4096 * A1 * A2 * A3 * q - 1024 * A1_3 * A3 * q - 4096 * A2_3 * q + 4096 * A1_2 * A2_2 * q -
         1280 * A1_4 * A2 * q + 128 * A1_6 * q + 8192 * A3 * A4 - 6144 * A1 * A2 * A4 + 1536 * A1_3 * A4 +
         2048 * A2_2 * A3 - 1024 * A1_2 * A2 * A3 + 128 * A1_4 * A3 - 512 * A1 * A2_3 + 384 * A1_3 * A2_2 -
         96 * A1_5 * A2 + 8 * A1_7;
  c[2] = 253952 * q6 - 233472 * A1 * q5 + 47104 * A2 * q4 + 65024 * A1_2 * q4 + 57344 * A3 * q3 -
         26624 * A1 * A2 * q3 - 5632 * A1_3 * q3 - 61440 * A4 * q2 - 12288 * A1 * A3 * q2 + 7168 * A2_2 * q2 -
         2048 * A1_2 * A2 * q2 + 1344 * A1_4 * q2 + 22528 * A1 * A4 * q - 2048 * A2 * A3 * q - 2560 * A1_2 * A3 * q +
         3584 * A1 * A2_2 * q - 1280 * A1_3 * A2 * q + 96 * A1_5 * q - 7168 * A2 * A4 + 1280 * A1_2 * A4 +
         4096 * A3 * A3 - 2048 * A1 * A2 * A3 + 512 * A1_3 * A3 - 256 * A2_3 + 576 * A1_2 * A2_2 - 240 * A1_4 * A2 +
         28 * A1_6;
  c[3] = -204800 * q5 + 136192 * A1 * q4 - 16384 * A2 * q3 - 29696 * A1_2 * q3 - 12288 * A3 * q2 +
         1024 * A1 * A2 * q2 + 4096 * A1_3 * q2 + 20480 * A4 * q - 1024 * A1 * A3 * q + 1024 * A2_2 * q -
         320 * A1_4 * q - 2560 * A1 * A4 - 1024 * A2 * A3 + 768 * A1_2 * A3 + 384 * A1 * A2_2 - 320 * A1_3 * A2 +
         56 * A1_5;
  c[4] = 79104 * q4 - 38144 * A1 * q3 + 512 * A2 * q2 + 7104 * A1_2 * q2 + 256 * A3 * q + 640 * A1 * A2 * q -
         800 * A1_3 * q - 2176 * A4 + 512 * A1 * A3 + 96 * A2_2 - 240 * A1_2 * A2 + 70 * A1_4;
  c[5] = -15360 * q3 + 5376 * A1 * q2 + 256 * A2 * q - 768 * A1_2 * q + 128 * A3 - 96 * A1 * A2 + 56 * A1_3;
  c[6] = 1472 * q2 - 352 * A1 * q - 16 * A2 + 28 * A1_2;
  c[7] = 8 * A1 - 64 * q;
  return c;
}

namespace {

void add_unique(CandidateSet& s, const LPolynomial& L, const std::string& note) {
  for (const auto& c : s.items)
    if (c.L == L) return;
  s.items.push_back({L, note});
}

void sort_items(CandidateSet& s) {
  std::sort(s.items.begin(), s.items.end(), [](const Candidate& x, const Candidate& y) { return x.L < y.L; });
}

bool exact_sqrt(const Int& n, Int& r) {
  if (n < 0) return false;
  r = isqrt(n);
  return r * r == n;
}

}  // namespace

CandidateSet genus4_descend(const LPolynomial& L2, const Int& q, const CurveSpec* curve, int trials,
                            std::uint64_t seed) {
  require(L2.g == 4, "genus4_descend: genus-4 input expected");
  require(L2.q == q * q, "genus4_descend: L2 must be over F_{q^2}");
  const Int &a12 = L2.a[0], &a22 = L2.a[1], &a32 = L2.a[2], &a42 = L2.a[3];
  auto c = appendix_a_coeffs(a12, a22, a32, a42, q);
  // Smallest prime l with l > 16 sqrt(q).
  Int l = next_prime(isqrt(256 * q));
  while (l * l <= 256 * q) l = next_prime(l);
  std::vector<Int> co(17, 0);
  for (int i = 0; i < 8; ++i) co[2 * i] = c[i];
  co[16] = 1;
  std::vector<Fe> roots = roots_in_prime_field(Poly::from_ints(make_prime_field(l), co), l, seed);
  std::vector<Int> a1s;
  for (const Fe& r : roots) {
    Int v = r.to_int();
    if (2 * v > l) v -= l;
    if (v * v <= 64 * q) a1s.push_back(v);
  }
  std::sort(a1s.begin(), a1s.end());
  CandidateSet out{q, 4, {}};
  auto consider = [&](const Int& a1, const Int& a2, const Int& a3, const Int& a4, const char* note) {
    LPolynomial L{q, 4, {a1, a2, a3, a4}};
    if (extend_lpoly(L, 2) == L2) add_unique(out, L, note);
  };
  for (const Int& a1 : a1s) {
    Int s = a12 + a1 * a1;
    if (!mpz_even_p(s.get_mpz_t())) continue;
    Int a2 = s / 2;
    if (a1 != 0) {
      Int B = 4 * (a2 * a2 - a22 - 2 * a2 * a1 * a1 + 2 * q * a1 * a1);
      Int C = 4 * a1 * a1 * (-a22 * q + a2 * a2 * q + a32 - 2 * a2 * q * q) + (a22 - a2 * a2) * (a22 - a2 * a2);
      Int disc = B * B - 16 * C, r;
      if (!exact_sqrt(disc, r)) continue;
      for (const Int& num : {Int(-B + r), Int(-B - r)}) {
        if (!mpz_divisible_ui_p(num.get_mpz_t(), 8)) continue;
        Int a4 = num / 8;
        Int n3 = a2 * a2 + 2 * a4 - a22;
        if (!mpz_divisible_p(n3.get_mpz_t(), Int(2 * a1).get_mpz_t())) continue;
        consider(a1, a2, n3 / (2 * a1), a4, "a1 != 0");
      }
    } else {
      Int n4 = a22 - a2 * a2;
      if (!mpz_even_p(n4.get_mpz_t())) continue;
      Int a4 = n4 / 2, r;
      if (!exact_sqrt(2 * q * q * a2 + 2 * a2 * a4 - a32, r)) continue;
      consider(a1, a2, r, a4, "a1 = 0");
      consider(a1, a2, -r, a4, "a1 = 0");
    }
  }
  sort_items(out);
  if (out.items.empty()) fail(Errc::NoCandidateSurvives, "no genus-4 tuple descends to the given extension");
  CandidateSet w = weil_filter(out);
  if (curve) return jacobian_eliminate(w, *curve, trials, seed);
  return w;
}

CandidateSet weil_filter(const CandidateSet& cands) {
  CandidateSet r{cands.q, cands.g, {}};
  for (const auto& c : cands.items)
    if (c.L.satisfies_weil()) r.items.push_back(c);
  if (r.items.empty()) fail(Errc::EmptyAfterFilter, "no candidate satisfies the Weil bounds");
  return r;
}

CandidateSet jacobian_eliminate(const CandidateSet& cands, const CurveSpec& curve, int trials, std::uint64_t seed) {
  require(curve.field->q == cands.q, "jacobian_eliminate: curve field does not match candidates");
  CandidateSet r{cands.q, cands.g, {}};
  if (cands.items.empty()) fail(Errc::NoCandidateSurvives, "no candidates to check");
  auto ds = sample_divisors(curve, trials, seed);
  for (const auto& c : cands.items)
    if (kills_all(curve, c.L.jacobian_order(), ds)) r.items.push_back(c);
  if (r.items.empty()) fail(Errc::NoCandidateSurvives, "every candidate failed the Jacobian order check");
  return r;
}

CandidateSet refine_over_extensions(const CandidateSet& cands, const CurveSpec& curve, int trials, std::uint64_t seed,
                                    int max_degree) {
  CandidateSet cur = cands;
  for (int k = 2; k <= max_degree && cur.items.size() > 1; ++k) {
    CurveSpec ck = base_change(curve, make_extension(curve.field, k));
    auto ds = sample_divisors(ck, trials, seed);
    CandidateSet next{cur.q, cur.g, {}};
    for (const auto& c : cur.items)
      if (kills_all(ck, extend_lpoly(c.L, k).jacobian_order(), ds)) next.items.push_back(c);
    if (next.items.empty()) break;
    cur = std::move(next);
  }
  return cur;
}

namespace {

// e'_0..e'_g with L(T) = sum_m e'_m T^m (1 + Q T^2)^(g - m).
std::vector<Int> real_weil_coeffs(const LPolynomial& L) {
  const int g = L.g;
  ZPoly full = L.full();
  std::vector<Int> e(g + 1, 0);
  for (int k = 0; k <= g; ++k) {
    Int v = full[k];
    for (int m = k - 2; m >= 0; m -= 2) v -= e[m] * binomial(g - m, (k - m) / 2) * ipow(L.q, (k - m) / 2);
    e[k] = v;
  }
  return e;
}

LPolynomial from_real_weil(const std::vector<Int>& e, const Int& Q) {
  const int g = static_cast<int>(e.size()) - 1;
  LPolynomial L{Q, g, {}};
  for (int k = 1; k <= g; ++k) {
    Int v = 0;
    for (int m = k; m >= 0; m -= 2) v += e[m] * binomial(g - m, (k - m) / 2) * ipow(Q, (k - m) / 2);
    L.a.push_back(v);
  }
  return L;
}

constexpr std::uint64_t kMaxCombos = 5'000'000;

}  // namespace

bool is_weil_polynomial(const LPolynomial& L) {
  if (L.g == 0) return true;
  if (!L.satisfies_weil()) return false;
  std::vector<Int> e = real_weil_coeffs(L);
  ZPoly h(L.g + 1);
  for (int m = 0; m <= L.g; ++m) h[L.g - m] = e[m];
  const Real bound = 2 * boost::multiprecision::sqrt(to_real(L.q)) * (1 + Real("1e-60"));
  for (const auto& [fac, mult] : squarefree_decomposition(h)) {
    auto roots = real_roots(fac);
    if (static_cast<int>(roots.size()) != static_cast<int>(fac.size()) - 1) return false;
    for (const Real& y : roots)
      if (abs(y) > bound) return false;
  }
  return true;
}

CandidateSet generic_descend(const LPolynomial& Lnk, int kj, const CurveSpec* curve, int trials, std::uint64_t seed) {
  require(kj >= 1, "generic_descend: kj must be >= 1");
  Int Q0;
  if (!mpz_root(Q0.get_mpz_t(), Lnk.q.get_mpz_t(), static_cast<unsigned long>(kj)))
    fail(Errc::InvalidArgument, "generic_descend: q is not a kj-th power");
  const int g = Lnk.g;
  CandidateSet out{Q0, g, {}};
  if (kj == 1) {
    out.items.push_back({Lnk, "identity"});
    if (curve) return jacobian_eliminate(out, *curve, trials, seed);
    return out;
  }
  std::vector<Int> e = real_weil_coeffs(Lnk);
  ZPoly h(g + 1);
  for (int m = 0; m <= g; ++m) h[g - m] = e[m];
  // Each root y of h lifts to kj values x with "x^kj" = y in the real Weil sense.
  using boost::multiprecision::acos;
  using boost::multiprecision::cos;
  const Real pi = boost::math::constants::pi<Real>();
  const Real sQ = boost::multiprecision::sqrt(to_real(Lnk.q));
  const Real sQ0 = boost::multiprecision::sqrt(to_real(Q0));
  struct Slot {
    std::vector<Real> pre;
    int mult;
  };
  std::vector<Slot> slots;
  for (const auto& [fac, mult] : squarefree_decomposition(h)) {
    for (const Real& y : real_roots(fac)) {
      Real t = y / (2 * sQ);
      if (t > 1) t = 1;
      if (t < -1) t = -1;
      Real th = acos(t);
      std::vector<Real> pre;
      for (int r = 0; r < kj; ++r) {
        Real x = 2 * sQ0 * cos((th + 2 * pi * r) / kj);
        bool dup = false;
        for (const Real& z : pre)
          if (abs(z - x) < Real("1e-40") * (1 + sQ0)) dup = true;
        if (!dup) pre.push_back(x);
      }
      slots.push_back({pre, mult});
    }
  }
  // Choices per slot: multisets of size mult from pre.
  std::vector<std::vector<std::vector<int>>> choices;
  std::uint64_t total = 1;
  for (const auto& s : slots) {
    std::vector<std::vector<int>> ms;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == s.mult) {
        ms.push_back(cur);
        return;
      }
      for (int i = start; i < static_cast<int>(s.pre.size()); ++i) {
        cur.push_back(i);
        self(self, i);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    choices.push_back(ms);
    total *= ms.size();
    if (total > kMaxCombos) fail(Errc::BudgetExceeded, "too many descent combinations");
  }
  std::vector<Real> slot_sum(slots.size());
  std::vector<size_t> idx(slots.size(), 0);
  const Real tol = Real("1e-30") * pow(1 + 4 * sQ0, g);
  for (std::uint64_t it = 0; it < total; ++it) {
    Real sum = 0;
    std::vector<Real> xs;
    for (size_t i = 0; i < slots.size(); ++i)
      for (int j : choices[i][idx[i]]) {
        sum += slots[i].pre[j];
        xs.push_back(slots[i].pre[j]);
      }
    if (abs(sum - round(sum)) < tol) {
      // Expand prod (y - x_j).
      std::vector<Real> poly{Real(1)};
      for (const Real& x : xs) {
        std::vector<Real> np(poly.size() + 1, Real(0));
        for (size_t i = 0; i < poly.size(); ++i) {
          np[i + 1] += poly[i];
          np[i] -= x * poly[i];
        }
        poly = std::move(np);
      }
      std::vector<Int> e0(g + 1);
      bool ok = true;
      for (int m = 0; m <= g && ok; ++m) {
        const Real& v = poly[g - m];
        e0[m] = round_to_int(v);
        if (abs(v - to_real(e0[m])) > tol) ok = false;
      }
      if (ok) {
        LPolynomial L = from_real_weil(e0, Q0);
        if (extend_lpoly(L, kj) == Lnk) add_unique(out, L, "descent by " + std::to_string(kj));
      }
    }
    for (size_t i = 0; i < slots.size(); ++i) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
  }
  sort_items(out);
  if (out.items.empty()) fail(Errc::NoCandidateSurvives, "no L-polynomial descends");
  CandidateSet w;
  try {
    w = weil_filter(out);
  } catch (const Error&) {
    fail(Errc::NoCandidateSurvives, "no descended candidate satisfies the Weil bounds");
  }
  if (curve) return jacobian_eliminate(w, *curve, trials, seed);
  return w;
}

}  // namespace hypercount
