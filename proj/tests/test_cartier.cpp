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

#include <tuple>

#include "doctest.h"
#include "hypercount/cartier.hpp"

using namespace hypercount;

namespace {

CurveSpec fam(long p, int g, long a, long b) {
  Field F = make_prime_field(Int(p));
  return curve_from_ab(g, Fe::from_int(F, a), Fe::from_int(F, b));
}

std::vector<std::vector<long>> as_longs(const Matrix& m) {
  std::vector<std::vector<long>> r;
  for (const auto& row : m) {
    r.emplace_back();
    for (const auto& e : row) r.back().push_back(e.to_int().get_si());
  }
  return r;
}

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> r;
  for (long p = lo; p <= hi; ++p)
    if (p > 2 && is_probable_prime(Int(p))) r.push_back(p);
  return r;
}

}  // namespace

TEST_CASE("naive Cartier-Manin matrix matches coefficients of f^((p-1)/2)") {
  // Entries c_{ip-j} read off a direct expansion.
  CHECK(as_longs(cm_matrix_naive(fam(13, 2, 3, 5)).entries) == std::vector<std::vector<long>>{{3, 0}, {0, 2}});
  CHECK(as_longs(cm_matrix_naive(fam(11, 3, 2, 7)).entries) ==
        std::vector<std::vector<long>>{{0, 0, 8}, {0, 0, 0}, {10, 0, 0}});
  CHECK(as_longs(cm_matrix_naive(fam(31, 5, 4, 9)).entries) ==
        std::vector<std::vector<long>>{{14, 0, 0, 0, 0}, {0, 28, 0, 0, 0}, {0, 0, 4, 0, 0}, {0, 0, 0, 19, 0}, {0, 0, 0, 0, 7}});
}

TEST_CASE("closed-form entries agree with the naive expansion") {
  Rng rng(5);
  for (int g = 2; g <= 7; ++g)
    for (long p : primes_in(3, 60)) {
      if (p % g == 0) continue;
      Field F = make_prime_field(Int(p));
      for (int t = 0; t < 4; ++t) {
        Fe a = random_element(F, rng), b = random_element(F, rng);
        if (b.is_zero()) continue;
        CurveSpec c;
        try {
          c = curve_from_ab(g, a, b);
        } catch (const Error&) {
          continue;
        }
        CAPTURE(g);
        CAPTURE(p);
        CHECK(cm_matrix_formula(c).entries == cm_matrix_naive(c).entries);
      }
    }
}

TEST_CASE("characteristic polynomial of a matrix") {
  Field F = make_prime_field(Int(7));
  auto e = [&](long v) { return Fe::from_int(F, v); };
  Matrix m = {{e(1), e(2)}, {e(3), e(4)}};
  auto cp = charpoly(m);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0].to_int() == 5);
  CHECK(cp[1].to_int() == 2);
  CHECK(cp[2].is_one());
}

TEST_CASE("chi mod p agrees with the zeta oracle") {
  for (auto [p, g, a, b] : std::vector<std::tuple<long, int, long, long>>{
           {13, 2, 3, 5}, {17, 2, 5, 6}, {13, 3, 2, 5}, {11, 3, 3, 2}, {7, 4, 2, 3}, {5, 6, 2, 3}, {3, 7, 1, 2}}) {
    CurveSpec c = fam(p, g, a, b);
    ChiModP want = chi_mod_p_from_lpoly(zeta_oracle(c));
    CHECK(chi_mod_p(c, CmMethod::Naive) == want);
    CHECK(chi_mod_p(c, CmMethod::Formula) == want);
  }
}

TEST_CASE("chi mod p over F_{p^2} uses the twisted matrix product") {
  Field F = make_prime_field(Int(5));
  Field E = make_extension(F, 2);
  Fe t = Fe::gen(E);
  CurveSpec c = curve_from_ab(2, t, t + Fe::one(E));
  ChiModP want = chi_mod_p_from_lpoly(zeta_oracle(c));
  CHECK(chi_mod_p(c, CmMethod::Naive) == want);
  CHECK(chi_mod_p(c, CmMethod::Formula) == want);
}

TEST_CASE("tabulated factorizations match the naive expansion") {
  Rng rng(11);
  for (int g = 2; g <= 7; ++g)
    for (long p : primes_in(g + 1, 110)) {
      Field F = make_prime_field(Int(p));
      for (int t = 0; t < 3; ++t) {
        Fe a = random_element(F, rng), b = random_element(F, rng);
        CurveSpec c;
        try {
          c = curve_from_ab(g, a, b);
        } catch (const Error&) {
          continue;
        }
        CAPTURE(g);
        CAPTURE(p);
        CHECK(chi_mod_p_table(g, c) == chi_mod_p(c, CmMethod::Naive));
      }
    }
}

TEST_CASE("table rows are keyed by the residue of p") {
  CHECK(table_row(2, Int(13)).modulus == 4);
  CHECK(table_row(2, Int(13)).residue == 1);
  CHECK(table_row(3, Int(11)).residue == 2);
  CHECK(table_row(4, Int(13)).modulus == 8);
  CHECK(table_row(6, Int(29)).modulus == 12);
  CHECK(table_row(7, Int(29)).residue == 1);
  Field F = make_prime_field(Int(3));
  CurveSpec c = curve_from_ab(5, Fe::one(F), Fe::from_int(F, 2));
  try {
    chi_mod_p_table(5, c);
    FAIL("expected RowNotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RowNotApplicable);
  }
}

TEST_CASE("factor degrees follow the cycle type of i -> ip - (p - 1)/2 mod g") {
  for (int g = 2; g <= 7; ++g)
    for (long p : primes_in(g + 1, 200)) {
      CAPTURE(g);
      CAPTURE(p);
      CHECK(table_factor_degrees(g, Int(p)) == permutation_structure(g, Int(p), 1).cycle_type);
    }
}

TEST_CASE("twist factor is sqrt(b)^((p-1)/i)") {
  Field F = make_prime_field(Int(13));
  Fe s = Fe::from_int(F, 6);
  CHECK(twist_factor(2, s) == pow(s, Int(6)));
  CHECK(twist_factor(4, s) == pow(s, Int(3)));
}
