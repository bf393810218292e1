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

#include "hypercount/cartier.hpp"
#include "hypercount/counting.hpp"
#include "hypercount/decomposition.hpp"

namespace hypercount {

const LPolynomial& ChiResult::value() const {
  if (candidates.size() != 1)
    fail(Errc::AmbiguousResult, std::to_string(candidates.size()) + " candidates survive elimination");
  return candidates.front();
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "holds";
    case CheckStatus::Fails: return "fails";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> r;
  for (int d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      r.push_back(d);
      n /= d;
    }
  if (n > 1) r.push_back(n);
  return r;
}

std::string join(const std::vector<LPolynomial>& Ls) {
  std::string s;
  for (const auto& L : Ls) s += (s.empty() ? "" : "; ") + L.to_string();
  return s;
}

void add_unique(std::vector<LPolynomial>& v, const LPolynomial& L) {
  if (std::find(v.begin(), v.end(), L) == v.end()) v.push_back(L);
}

struct Tower {
  Field Fs;  // F_q(sqrt b)
  Field E;   // F_q(b^(1/m)), built over Fs
  int e = 1, K = 1;
  Fe r, s;   // r^m = b, s = r^(m/2) in Fs
};

Tower root_tower(const Fe& b, int m) {
  Tower t;
  const Field& F = b.field();
  t.K = nth_root_field_degree(b, m);
  t.Fs = F;
  if (!sqrt(b)) {
    t.Fs = make_extension(F, 2);
    t.e = 2;
  }
  t.E = t.K == t.e ? t.Fs : make_extension(t.Fs, t.K / t.e);
  t.r = nth_root(b, m, t.E);
  t.s = restrict_or_throw(pow(t.r, Int(m / 2)), t.Fs);
  return t;
}

std::vector<LPolynomial> finish(const CandidateSet& cs, const CurveSpec& c, const AlgorithmOptions& opt,
                                std::vector<std::string>& transcript) {
  std::vector<LPolynomial> out = cs.polys();
  if (out.size() > 1 && c.family) {
    const ChiModP target = chi_mod_p(c, CmMethod::Formula);
    std::vector<LPolynomial> kept;
    for (const auto& L : out)
      if (chi_mod_p_from_lpoly(L) == target) kept.push_back(L);
    if (!kept.empty()) out = kept;
    transcript.push_back("cartier-manin check: " + join(out));
  }
  if (out.size() > 1) {
    CandidateSet rest{cs.q, cs.g, {}};
    for (const auto& L : out) rest.items.push_back({L, ""});
    out = refine_over_extensions(rest, c, opt.trials, opt.seed, opt.refine_degree).polys();
    transcript.push_back("extension check: " + join(out));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Descends every candidate over F_{q^K} to F_q one prime factor at a time.
std::vector<LPolynomial> descend_all(const CurveSpec& c, std::vector<LPolynomial> cur, int K, const AlgorithmOptions& opt,
                                     std::vector<std::string>& transcript, bool genus4_halving) {
  int n = K;
  for (int kj : prime_factors(K)) {
    const int n2 = n / kj;
    CurveSpec cn = n2 == 1 ? c : base_change(c, make_extension(c.field, n2));
    std::vector<LPolynomial> next;
    for (const auto& L : cur) {
      try {
        CandidateSet cs = genus4_halving && kj == 2 ? genus4_descend(L, cn.field->q, &cn, opt.trials, opt.seed)
                                                    : generic_descend(L, kj, &cn, opt.trials, opt.seed);
        for (const auto& x : cs.items) add_unique(next, x.L);
      } catch (const Error& e) {
        if (e.code() != Errc::NoCandidateSurvives && e.code() != Errc::EmptyAfterFilter) throw;
      }
    }
    if (next.empty()) fail(Errc::NoCandidateSurvives, "descent to F_{q^" + std::to_string(n2) + "} left no candidate");
    std::sort(next.begin(), next.end());
    transcript.push_back("descend by " + std::to_string(kj) + " to q^" + std::to_string(n2) + ": " + join(next));
    cur = std::move(next);
    n = n2;
  }
  CandidateSet cs{c.field->q, c.g, {}};
  for (const auto& L : cur) cs.items.push_back({L, ""});
  if (K == 1) {
    cs = jacobian_eliminate(cs, c, opt.trials, opt.seed);
    transcript.push_back("jacobian check: " + join(cs.polys()));
  }
  return finish(cs, c, opt, transcript);
}

}  // namespace

ChiResult algorithm1(const CurveSpec& c, const AlgorithmOptions& opt) {
  if (!c.family) fail(Errc::InvalidArgument, "algorithm1 needs a family curve");
  const int g = c.g;
  if (g < 2 || g > 7) fail(Errc::UnsupportedGenus, "algorithm1 covers genus 2..7");
  if (divides(c.field->p, g))
    fail(Errc::CharacteristicDividesGenus, "p divides g");
  const auto& [a, b] = *c.family;
  ChiResult res;
  Tower t = root_tower(b, 2 * g);
  res.transcript.push_back("splitting field degree K = " + std::to_string(t.K) + ", sqrt(b) degree " + std::to_string(t.e));
  QuotientPair tw = twist_curves_with_root(g, a, t.s);
  LPolynomial L1t = zeta_oracle(tw.X1, opt.budget), L2t = zeta_oracle(tw.X2, opt.budget);
  const int chi = quadratic_character(t.r);
  LPolynomial L1 = lpoly_twist(extend_lpoly(L1t, t.K / t.e), chi);
  LPolynomial L2 = lpoly_twist(extend_lpoly(L2t, t.K / t.e), chi);
  LPolynomial LC = lpoly_product(L1, L2);
  res.transcript.push_back("L_X1 = " + L1.to_string() + ", L_X2 = " + L2.to_string() + " over q^" + std::to_string(t.K));
  res.candidates = descend_all(c, {LC}, t.K, opt, res.transcript, false);
  return res;
}

namespace {

Fe legendre_or_trace6(const Fe& c, const AlgorithmOptions& opt) {
  const Field& F = c.field();
  const Int& p = F->p;
  Poly e6 = Poly::from_ints(F, {0, -3, 0, 1}) + Poly::constant(Int(2) * c);
  if (p > 5 && is_squarefree(e6)) {
    Int t = frobenius_trace(make_curve(e6), opt.provider);
    int s = mpz_legendre(Int(3).get_mpz_t(), p.get_mpz_t());
    return Fe::from_int(F, s * t);
  }
  return legendre_eval(mod(Int(p / 6), p).get_si(), c);
}

}  // namespace

ChiResult algorithm2_genus3(const Fe& a, const Fe& b, const AlgorithmOptions& opt) {
  const Field& F = a.field();
  if (F->k != 1) fail(Errc::NotPrimeField, "algorithm2 works over F_p");
  const Int& p = F->p;
  if (p <= 3) fail(Errc::InvalidArgument, "algorithm2 needs p > 3");
  CurveSpec C = curve_from_ab(3, a, b);
  ChiResult res;
  Int t2 = frobenius_trace(curve_from_ab(1, a, b), opt.provider);
  res.transcript.push_back("t2 = " + t2.get_str());
  std::vector<std::pair<Fe, Fe>> mods;  // (A1, A2) mod p of L_A
  if (auto sb = sqrt(b)) {
    Fe c = -a / (Int(2) * *sb);
    Fe P = legendre_or_trace6(c, opt);
    if (mod(p, 3) == 1) {
      Fe b6 = pow(*sb, (p - 1) / 6);
      mods.emplace_back(-P * (pow(b6, 5) + b6), P * P * pow(b6, 6));
    } else {
      Fe b2 = pow(*sb, (p - 1) / 2);
      mods.emplace_back(Fe::zero(F), -(b2 * b2) * P * P);
    }
    res.transcript.push_back("sqrt(b) in F_p: A1, A2 = " + mods[0].first.to_string() + ", " + mods[0].second.to_string() +
                             " mod p");
  } else {
    Field E = make_extension(F, 2);
    Fe sbe = *sqrt(embed(b, E));
    Fe c = -embed(a, E) / (Int(2) * sbe);
    Poly e6 = Poly::from_ints(E, {0, -3, 0, 1}) + Poly::constant(Int(2) * c);
    Int t62 = frobenius_trace(make_curve(e6), opt.provider);
    const Int q2 = p * p;
    Fe u = pow(sbe, 5 * (q2 - 1) / 6) + pow(sbe, (q2 - 1) / 6);
    Fe A22 = restrict_or_throw(Fe::from_int(E, t62 * t62), F);
    for (int sign : {1, -1}) {
      Fe A12 = restrict_or_throw(Int(sign) * t62 * u, F);
      try {
        for (const auto& [b1, b2] : genus3_descend_mod_p(-A12, A22)) mods.emplace_back(b1, b2);
      } catch (const Error& e) {
        if (e.code() != Errc::NoSolution) throw;
      }
    }
    res.transcript.push_back("sqrt(b) not in F_p: t6 over F_p^2 = " + t62.get_str() + ", " +
                             std::to_string(mods.size()) + " residue pairs");
  }
  if (mods.empty()) fail(Errc::NoCandidateSurvives, "no residue pair for chi_A");
  const LPolynomial LE{p, 1, {-t2}};
  const Int B1 = isqrt(16 * p), B2 = 6 * p;
  std::vector<LPolynomial> pool;
  for (const auto& [m1, m2] : mods) {
    const Int r1 = m1.to_int(), r2 = m2.to_int();
    for (Int b1 = -B1 + mod(r1 + B1, p); b1 <= B1; b1 += p) {
      for (Int b2 = -B2 + mod(r2 + B2, p); b2 <= B2; b2 += p) {
        LPolynomial LA{p, 2, {b1, b2}};
        if (!is_weil_polynomial(LA)) continue;
        add_unique(pool, lpoly_product(LE, LA));
      }
    }
  }
  std::sort(pool.begin(), pool.end());
  res.transcript.push_back(std::to_string(pool.size()) + " lifted candidates");
  CandidateSet cs{p, 3, {}};
  for (const auto& L : pool) cs.items.push_back({L, ""});
  if (cs.items.empty()) fail(Errc::NoCandidateSurvives, "no lift satisfies the Weil bounds");
  cs = jacobian_eliminate(cs, C, opt.trials, opt.seed);
  res.transcript.push_back("jacobian check: " + join(cs.polys()));
  res.candidates = finish(cs, C, opt, res.transcript);
  return res;
}

ChiResult algorithm3_genus4(const Fe& a, const Fe& b, const AlgorithmOptions& opt) {
  CurveSpec C = curve_from_ab(4, a, b);
  ChiResult res;
  Tower t = root_tower(b, 8);
  res.transcript.push_back("splitting field degree K = " + std::to_string(t.K) + ", sqrt(b) degree " + std::to_string(t.e));
  QuotientPair tw = twist_curves_with_root(4, a, t.s);
  LPolynomial Lt = zeta_oracle(tw.X1, opt.budget);
  LPolynomial Lk = lpoly_twist(extend_lpoly(Lt, t.K / t.e), quadratic_character(t.r));
  const Int qK = Lk.q;
  const bool minus_one_square = mod(qK, 4) == 1;
  LPolynomial LC = genus2_twist_combine(Lk.a[0], Lk.a[1], qK, minus_one_square);
  res.transcript.push_back("L_X1 over q^" + std::to_string(t.K) + " = " + Lk.to_string() + ", combined " + LC.to_string());
  res.candidates = descend_all(C, {LC}, t.K, opt, res.transcript, true);
  return res;
}

Theorem3Result theorem3_check(const Int& p, const Fe& c, int variant, const TraceProvider& provider) {
  const Field& F = c.field();
  if (F->k != 1 || F->p != p) fail(Errc::NotPrimeField, "theorem3_check needs c in F_p");
  if (p <= 3) fail(Errc::InvalidArgument, "theorem3_check needs p > 3");
  Theorem3Result r;
  const Fe two = Fe::from_int(F, 2), three = Fe::from_int(F, 3);
  Fe A, B;
  long idx = 0;
  int sign = 0;
  switch (variant) {
    case 2:
      A = -three * (c * c + three);
      B = two * c * (c * c - Fe::from_int(F, 9));
      idx = Int((p - 1) / 2).get_si();
      sign = mpz_legendre(mod(Int(-6), p).get_mpz_t(), p.get_mpz_t());
      break;
    case 3:
      A = three * (Fe::from_int(F, 4) * c - Fe::from_int(F, 5));
      B = two * (two * c * c - Fe::from_int(F, 14) * c + Fe::from_int(F, 11));
      idx = Int(p / 3).get_si();
      sign = mod(p, 3) == 1 ? 1 : -1;
      break;
    case 4:
      A = -(three / two) * (three * c + Fe::from_int(F, 5));
      B = Fe::from_int(F, 9) * c + Fe::from_int(F, 7);
      idx = Int(p / 4).get_si();
      sign = mpz_legendre(Int(6).get_mpz_t(), p.get_mpz_t());
      break;
    case 6:
      if (p <= 5) return r;
      A = -three;
      B = two * c;
      idx = Int(p / 6).get_si();
      sign = mpz_legendre(Int(3).get_mpz_t(), p.get_mpz_t());
      break;
    default:
      fail(Errc::InvalidArgument, "variant must be 2, 3, 4 or 6");
  }
  Poly f = Poly::monomial(Fe::one(F), 3) + Poly::monomial(A, 1) + Poly::constant(B);
  if (!is_squarefree(f)) return r;
  Int t = frobenius_trace(make_curve(f), provider);
  r.lhs = legendre_eval(idx, c).to_int();
  r.rhs = mod(sign * t, p);
  r.status = r.lhs == r.rhs ? CheckStatus::Holds : CheckStatus::Fails;
  return r;
}

Sec5Result sec5_congruence_check(const Int& p, const Fe& rho, std::uint64_t budget) {
  const Field& F = rho.field();
  if (F->k != 1 || F->p != p) fail(Errc::NotPrimeField, "sec5_congruence_check needs rho in F_p");
  if (mod(p, 8) != 1) fail(Errc::InvalidArgument, "p must be 1 mod 8");
  Sec5Result r;
  CurveSpec X1;
  try {
    X1 = quotients_of_Cprime(4, Int(-2) * rho).X1;
  } catch (const Error& e) {
    if (e.code() != Errc::SingularCurve) throw;
    r.note = "singular specialization";
    return r;
  }
  LPolynomial L = zeta_oracle(X1, budget);
  r.b1 = L.a[0];
  r.b2 = L.a[1];
  r.d = mod(r.b1 * r.b1 - 4 * r.b2, p);
  r.p1 = legendre_eval(Int((p - 1) / 8).get_si(), rho).to_int();
  r.p3 = legendre_eval(Int((3 * p - 3) / 8).get_si(), rho).to_int();
  auto sd = sqrt(Fe::from_int(F, r.d));
  if (!sd) {
    r.status = CheckStatus::Fails;
    r.note = "non-residue discriminant";
    return r;
  }
  const Fe b1 = Fe::from_int(F, r.b1), b2 = Fe::from_int(F, r.b2);
  const Fe P1 = Fe::from_int(F, r.p1), P3 = Fe::from_int(F, r.p3);
  for (int sign : {1, -1}) {
    Fe den = -b1 + Int(sign) * *sd;
    bool ok;
    if (den.is_zero()) {
      ok = P1 + P3 == -b1 && P1 * P3 == b2;
      if (ok) r.degenerate = true;
    } else {
      ok = Int(2) * P1 == den && P3 * den == Int(2) * b2;
    }
    if (ok) {
      r.sign = sign;
      r.status = CheckStatus::Holds;
      return r;
    }
  }
  r.status = CheckStatus::Fails;
  r.note = "no sign choice satisfies both congruences";
  return r;
}

}  // namespace hypercount
