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
#include <map>

#include "hypercount/cartier.hpp"

namespace hypercount {

namespace {

using u64 = std::uint64_t;

// Coefficients 0..D of f^e over F_p, p < 2^32.
std::vector<u64> power_truncated_u64(const std::vector<u64>& f, const Int& e, int D, u64 p) {
  auto mul = [&](const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(std::min<size_t>(a.size() + b.size() - 1, D + 1), 0);
    std::vector<int> nb;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j]) nb.push_back(static_cast<int>(j));
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (int j : nb) {
        size_t k = i + j;
        if (k >= r.size()) break;
        r[k] = (r[k] + a[i] * b[j]) % p;
      }
    }
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
  };
  std::vector<u64> r{1}, b = f;
  if (static_cast<int>(b.size()) > D + 1) b.resize(D + 1);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
  }
  return r;
}

std::vector<Fe> power_truncated(const std::vector<Fe>& f, const Int& e, int D, const Field& F) {
  auto mul = [&](const std::vector<Fe>& a, const std::vector<Fe>& b) {
    std::vector<Fe> r(std::min<size_t>(a.size() + b.size() - 1, D + 1), Fe::zero(F));
    std::vector<int> nb;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) nb.push_back(static_cast<int>(j));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j : nb) {
        size_t k = i + j;
        if (k >= r.size()) break;
        r[k] += a[i] * b[j];
      }
    }
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
  };
  std::vector<Fe> r{Fe::one(F)}, b = f;
  if (static_cast<int>(b.size()) > D + 1) b.resize(D + 1);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, b);
  }
  return r;
}

Matrix zero_matrix(const Field& F, int n) { return Matrix(n, std::vector<Fe>(n, Fe::zero(F))); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix r = zero_matrix(a[0][0].field(), static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

void require_odd_char(const CurveSpec& c) {
  if (c.field->p == 2) fail(Errc::EvenCharacteristic, "characteristic 2");
}

}  // namespace

CMMatrix cm_matrix_naive(const CurveSpec& c, std::uint64_t budget) {
  require_odd_char(c);
  const Field& F = c.field;
  const int g = c.g;
  const Int& p = F->p;
  // Dense truncated expansion holds g p coefficients; allow at most budget / 100.
  if (Int(g) * p * 100 > Int(static_cast<unsigned long>(budget)))
    fail(Errc::BudgetExceeded, "f^((p-1)/2) expansion exceeds budget for p = " + p.get_str());
  const long pl = p.get_si();
  const int D = static_cast<int>(g * pl - 1);
  const Int m = (p - 1) / 2;
  Matrix W = zero_matrix(F, g);
  if (F->k == 1) {
    std::vector<u64> f;
    for (int i = 0; i <= c.f.degree(); ++i) f.push_back(c.f.coeff(i).to_int().get_ui());
    auto r = power_truncated_u64(f, m, D, p.get_ui());
    for (int i = 1; i <= g; ++i)
      for (int j = 1; j <= g; ++j) {
        long e = i * pl - j;
        if (e >= 0 && e < static_cast<long>(r.size())) W[i - 1][j - 1] = Fe::from_int(F, Int(static_cast<unsigned long>(r[e])));
      }
  } else {
    auto r = power_truncated(c.f.coeffs(), m, D, F);
    for (int i = 1; i <= g; ++i)
      for (int j = 1; j <= g; ++j) {
        long e = i * pl - j;
        if (e >= 0 && e < static_cast<long>(r.size())) W[i - 1][j - 1] = r[e];
      }
  }
  return {c, W};
}

CMMatrix cm_matrix_formula(const CurveSpec& c) {
  require_odd_char(c);
  if (!c.family) fail(Errc::InvalidArgument, "cm_matrix_formula needs a family curve");
  const Field& F = c.field;
  const int g = c.g;
  const Int& p = F->p;
  if (divides(p, g))
    fail(Errc::CharacteristicDividesGenus, "p divides g");
  const auto& [a, b] = *c.family;
  Field E = F;
  auto s = sqrt(b);
  if (!s) {
    E = make_extension(F, 2);
    s = sqrt(embed(b, E));
  }
  if (!s) fail(Errc::MismatchDetected, "sqrt(b) not found in quadratic extension");
  const Fe t = -embed(a, E) / (Int(2) * *s);
  const long pl = p.get_si();
  const long m = (pl - 1) / 2;
  Matrix W = zero_matrix(F, g);
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      long e = i * pl - j;
      long d = e - m;
      if (d < 0 || d % g != 0) continue;
      long n = d / g;
      if (n > 2 * m) continue;
      Fe w = pow(*s, Int(2 * m - n)) * legendre_eval(n, t);
      auto wr = restrict_to(w, F);
      if (!wr) fail(Errc::MismatchDetected, "Cartier-Manin entry does not lie in the base field");
      W[i - 1][j - 1] = *wr;
    }
  return {c, W};
}

Matrix wp_product(const CMMatrix& W, int n) {
  require(n >= 1, "wp_product: n must be >= 1");
  const int g = static_cast<int>(W.entries.size());
  Matrix Wt = zero_matrix(W.curve.field, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) Wt[i][j] = W.entries[j][i];
  Matrix r = Wt;
  for (int k = 1; k < n; ++k) {
    Matrix f = Wt;
    for (auto& row : f)
      for (auto& x : row) x = frobenius(x, k);
    r = matmul(r, f);
  }
  return r;
}

std::vector<Fe> charpoly(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  require(n >= 1, "charpoly: empty matrix");
  const Field& F = m[0][0].field();
  Matrix H = m;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (int c = 1; c + 1 < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!H[i][c - 1].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c) {
      std::swap(H[piv], H[c]);
      for (int i = 0; i < n; ++i) std::swap(H[i][piv], H[i][c]);
    }
    Fe tinv = inv(H[c][c - 1]);
    for (int i = c + 1; i < n; ++i) {
      Fe u = H[i][c - 1] * tinv;
      if (u.is_zero()) continue;
      for (int j = 0; j < n; ++j) H[i][j] -= u * H[c][j];
      for (int j = 0; j < n; ++j) H[j][c] += u * H[j][i];
    }
  }
  std::vector<Poly> P;
  P.push_back(Poly::constant(Fe::one(F)));
  const Poly X = Poly::x(F);
  for (int k = 0; k < n; ++k) {
    Poly r = (X - Poly::constant(H[k][k])) * P[k];
    Fe prod = Fe::one(F);
    for (int i = k - 1; i >= 0; --i) {
      prod *= H[i + 1][i];
      if (prod.is_zero()) break;
      r -= (prod * H[i][k]) * P[i];
    }
    P.push_back(r);
  }
  std::vector<Fe> out(n + 1, Fe::zero(F));
  for (int i = 0; i <= P[n].degree(); ++i) out[i] = P[n].coeff(i);
  return out;
}

bool operator==(const ChiModP& x, const ChiModP& y) { return x.p == y.p && x.g == y.g && x.coeffs == y.coeffs; }

std::string to_string(const ChiModP& c) {
  ZPoly z(c.coeffs.begin(), c.coeffs.end());
  return zstr(ztrim(z)) + " (mod " + c.p.get_str() + ")";
}

namespace {

ChiModP chi_from_field_poly(const std::vector<Fe>& cp, int g, const Int& p) {
  const Field Fp = make_prime_field(p);
  ChiModP r{p, g, std::vector<Int>(2 * g + 1, 0)};
  for (size_t i = 0; i < cp.size(); ++i) {
    auto v = restrict_to(cp[i], Fp);
    if (!v) fail(Errc::MismatchDetected, "characteristic polynomial coefficient outside F_p");
    r.coeffs[g + i] = v->to_int();
  }
  return r;
}

}  // namespace

ChiModP chi_mod_p(const CurveSpec& c, CmMethod method, std::uint64_t budget) {
  CMMatrix W = method == CmMethod::Naive ? cm_matrix_naive(c, budget) : cm_matrix_formula(c);
  std::vector<Fe> cp = charpoly(wp_product(W, c.field->k));
  return chi_from_field_poly(cp, c.g, c.field->p);
}

ChiModP chi_mod_p_from_lpoly(const LPolynomial& L) {
  Int p;
  for (unsigned long k = 1;; ++k) {
    require(k < 128, "chi_mod_p_from_lpoly: q is not a prime power");
    if (mpz_root(p.get_mpz_t(), L.q.get_mpz_t(), k) && is_probable_prime(p)) break;
  }
  ChiModP r{p, L.g, {}};
  for (const Int& x : L.chi()) r.coeffs.push_back(mod(x, p));
  return r;
}

namespace {

using LI = LegendreIndex;

const std::vector<TableRow>& table() {
  static const std::vector<TableRow> rows = {
      {2, 4, 1, {{1, 4, 3, {{1, -1, 4}}}, {1, 4, 1, {{1, -1, 4}}}}},
      {2, 4, 3, {{2, 2, 2, {{1, -3, 4, 2}}}}},
      {3, 3, 1, {{1, 2, 1, {{1, -1, 2}}}, {1, 6, 5, {{1, -1, 6}}}, {1, 6, 1, {{1, -1, 6}}}}},
      {3, 3, 2, {{1, 2, 1, {{1, -1, 2}}}, {2, 2, 2, {{1, -5, 6, 2}}}}},
      {4, 8, 1,
       {{1, 8, 5, {{3, -3, 8}}}, {1, 8, 3, {{3, -3, 8}}}, {1, 8, 7, {{1, -1, 8}}}, {1, 8, 1, {{1, -1, 8}}}}},
      {4, 8, 3, {{2, 2, 3, {{3, -1, 8}, {1, -3, 8}}}, {2, 2, 1, {{3, -1, 8}, {1, -3, 8}}}}},
      {4, 8, 5, {{2, 4, 5, {{3, -7, 8}, {1, -5, 8}}}, {2, 4, 3, {{3, -7, 8}, {1, -5, 8}}}}},
      {4, 8, 7, {{2, 2, 2, {{3, -5, 8, 2}}}, {2, 2, 2, {{1, -7, 8, 2}}}}},
      {5, 5, 1,
       {{1, 2, 1, {{1, -1, 2}}},
        {1, 10, 7, {{3, -3, 10}}},
        {1, 10, 3, {{3, -3, 10}}},
        {1, 10, 9, {{1, -1, 10}}},
        {1, 10, 1, {{1, -1, 10}}}}},
      {5, 5, 2, {{4, 2, 4, {{3, -1, 10, 2}, {1, -7, 10, 2}}}, {1, 2, 1, {{1, -1, 2}}}}},
      {5, 5, 3, {{4, 2, 4, {{3, -9, 10, 2}, {1, -3, 10, 2}}}, {1, 2, 1, {{1, -1, 2}}}}},
      {5, 5, 4, {{2, 2, 2, {{3, -7, 10, 2}}}, {2, 2, 2, {{1, -9, 10, 2}}}, {1, 2, 1, {{1, -1, 2}}}}},
      {6, 12, 1,
       {{1, 12, 7, {{5, -5, 12}}},
        {1, 12, 5, {{5, -5, 12}}},
        {1, 12, 9, {{1, -1, 4}}},
        {1, 12, 3, {{1, -1, 4}}},
        {1, 12, 11, {{1, -1, 12}}},
        {1, 12, 1, {{1, -1, 12}}}}},
      {6, 12, 5,
       {{2, 2, 3, {{5, -1, 12}, {1, -5, 12}}},
        {2, 2, 1, {{5, -1, 12}, {1, -5, 12}}},
        {1, 4, 3, {{1, -1, 4}}},
        {1, 4, 1, {{1, -1, 4}}}}},
      {6, 12, 7,
       {{2, 2, 2, {{1, -3, 4, 2}}}, {2, 3, 4, {{5, -11, 12}, {1, -7, 12}}}, {2, 3, 2, {{5, -11, 12}, {1, -7, 12}}}}},
      {6, 12, 11, {{2, 2, 2, {{5, -7, 12, 2}}}, {2, 2, 2, {{1, -3, 4, 2}}}, {2, 2, 2, {{1, -11, 12, 2}}}}},
      {7, 7, 1,
       {{1, 2, 1, {{1, -1, 2}}},
        {1, 14, 9, {{5, -5, 14}}},
        {1, 14, 5, {{5, -5, 14}}},
        {1, 14, 11, {{3, -3, 14}}},
        {1, 14, 3, {{3, -3, 14}}},
        {1, 14, 13, {{1, -1, 14}}},
        {1, 14, 1, {{1, -1, 14}}}}},
      {7, 7, 2, {{3, 2, 3, {{5, -3, 14}, {3, -13, 14}, {1, -9, 14}}, 2}, {1, 2, 1, {{1, -1, 2}}}}},
      {7, 7, 3, {{6, 2, 6, {{5, -1, 14, 2}, {3, -9, 14, 2}, {1, -3, 14, 2}}}, {1, 2, 1, {{1, -1, 2}}}}},
      {7, 7, 4, {{3, 2, 3, {{5, -13, 14}, {3, -5, 14}, {1, -11, 14}}, 2}, {1, 2, 1, {{1, -1, 2}}}}},
      {7, 7, 5, {{6, 2, 6, {{5, -11, 14, 2}, {3, -1, 14, 2}, {1, -5, 14, 2}}}, {1, 2, 1, {{1, -1, 2}}}}},
      {7, 7, 6,
       {{2, 2, 2, {{5, -9, 14, 2}}}, {2, 2, 2, {{3, -11, 14, 2}}}, {2, 2, 2, {{1, -13, 14, 2}}}, {1, 2, 1, {{1, -1, 2}}}}},
  };
  return rows;
}

int table_modulus(int g) {
  static const std::map<int, int> m = {{2, 4}, {3, 3}, {4, 8}, {5, 5}, {6, 12}, {7, 7}};
  auto it = m.find(g);
  if (it == m.end()) fail(Errc::UnsupportedGenus, "table covers genus 2..7");
  return it->second;
}

Int exact_div(const Int& n, long d, const char* what) {
  if (!mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d)))
    fail(Errc::MismatchDetected, std::string(what) + " is not integral for this p");
  return n / d;
}

}  // namespace

const TableRow& table_row(int g, const Int& p) {
  const int M = table_modulus(g);
  if (p <= g) fail(Errc::RowNotApplicable, "table rows need p > g");
  if (divides(p, g))
    fail(Errc::CharacteristicDividesGenus, "p divides g");
  const int r = static_cast<int>(mod(p, M).get_si());
  for (const auto& row : table())
    if (row.g == g && row.residue == r) return row;
  fail(Errc::RowNotApplicable, "no table row for p = " + p.get_str() + " mod " + std::to_string(M));
}

std::vector<int> table_factor_degrees(int g, const Int& p) {
  std::vector<int> d;
  for (const auto& f : table_row(g, p).factors)
    for (int k = 0; k < f.mult; ++k) d.push_back(f.deg);
  std::sort(d.begin(), d.end());
  return d;
}

Fe twist_factor(int i, const Fe& sqrt_b) {
  return pow(sqrt_b, exact_div(sqrt_b.p() - 1, i, "(p-1)/i"));
}

ChiModP chi_mod_p_table(int g, const CurveSpec& c) {
  table_modulus(g);
  if (c.g != g) fail(Errc::InvalidArgument, "curve genus does not match g");
  if (!c.family) fail(Errc::InvalidArgument, "chi_mod_p_table needs a family curve");
  if (c.field->k != 1) fail(Errc::NotPrimeField, "table applies over a prime field");
  const Int& p = c.field->p;
  const TableRow& row = table_row(g, p);
  const auto& [a, b] = *c.family;
  Field E = c.field;
  auto s = sqrt(b);
  if (!s) {
    E = make_extension(c.field, 2);
    s = sqrt(embed(b, E));
  }
  if (!s) fail(Errc::MismatchDetected, "sqrt(b) not found in quadratic extension");
  const Fe t = -embed(a, E) / (Int(2) * *s);
  Poly acc = Poly::monomial(Fe::one(E), g);
  for (const auto& f : row.factors) {
    Fe cst = pow(twist_factor(f.i, *s), Int(f.pow));
    for (const auto& li : f.legendre) {
      Int idx = exact_div(Int(li.A) * p + li.B, li.D, "Legendre index");
      cst *= pow(legendre_eval(idx.get_si(), t), Int(li.exp));
    }
    Poly fac = Poly::monomial(Fe::one(E), f.deg) - Poly::constant(cst);
    for (int k = 0; k < f.mult; ++k) acc *= fac;
  }
  ChiModP r{p, g, std::vector<Int>(2 * g + 1, 0)};
  for (int i = 0; i <= acc.degree(); ++i) {
    auto v = restrict_to(acc.coeff(i), c.field);
    if (!v) fail(Errc::MismatchDetected, "table polynomial coefficient outside F_p");
    r.coeffs[i] = v->to_int();
  }
  return r;
}

PermutationStructure permutation_structure(int g, const Int& p, int n) {
  require(g >= 1 && n >= 1, "permutation_structure: g, n >= 1");
  if (divides(p, g))
    fail(Errc::CharacteristicDividesGenus, "p divides g");
  const Int P = ipow(p, n);
  const Int shift = (P - 1) / 2;
  std::vector<int> sigma(g);
  for (int i = 0; i < g; ++i) sigma[i] = static_cast<int>(mod(Int(i) * P - shift, g).get_si());
  PermutationStructure ps;
  std::vector<bool> seen(g, false);
  for (int i = 0; i < g; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    ps.cycle_type.push_back(static_cast<int>(cyc.size()));
    ps.cycles.push_back(std::move(cyc));
  }
  std::sort(ps.cycle_type.begin(), ps.cycle_type.end());
  return ps;
}

}  // namespace hypercount
