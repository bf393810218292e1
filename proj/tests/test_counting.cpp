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
#include <tuple>

#include "doctest.h"
#include "hypercount/counting.hpp"

using namespace hypercount;

namespace {

CurveSpec fam(long p, int g, long a, long b) {
  Field F = make_prime_field(Int(p));
  return curve_from_ab(g, Fe::from_int(F, a), Fe::from_int(F, b));
}

LPolynomial lp(long q, std::vector<long> a) {
  return LPolynomial{Int(q), static_cast<int>(a.size()), std::vector<Int>(a.begin(), a.end())};
}

bool contains(const ChiResult& r, const LPolynomial& L) {
  return std::find(r.candidates.begin(), r.candidates.end(), L) != r.candidates.end();
}

}  // namespace

TEST_CASE("elliptic traces by enumeration and baby-step giant-step") {
  // Traces of y^2 = x^3 + a x^2 + b x from direct counts.
  for (auto [p, a, b, t] : std::vector<std::tuple<long, long, long, long>>{
           {101, 3, 7, -6}, {1009, 5, 11, 48}, {10007, 2, 3, 192}}) {
    CAPTURE(p);
    CurveSpec E = fam(p, 1, a, b);
    CHECK(frobenius_trace(E, {TraceMethod::Naive}) == t);
    CHECK(frobenius_trace(E, {TraceMethod::Bsgs}) == t);
  }
  CurveSpec big = fam(1000003, 1, 5, 7);
  CHECK(frobenius_trace(big, {TraceMethod::Bsgs}) == frobenius_trace(big, {TraceMethod::Naive}));
}

TEST_CASE("general algorithm") {
  ChiResult r = algorithm1(fam(13, 2, 3, 5));
  CHECK(contains(r, lp(13, {8, 32})));
  CHECK_FALSE(r.transcript.empty());
  CHECK(contains(algorithm1(fam(17, 2, 5, 6)), lp(17, {2, 2})));
  CHECK(contains(algorithm1(fam(5, 6, 2, 3)), lp(5, {4, 8, 20, 0, -100, -200})));
  CHECK(contains(algorithm1(fam(3, 7, 1, 2)), lp(3, {2, 3, 0, 0, 0, 38, 76})));
  CHECK(contains(algorithm1(fam(3, 5, 1, 2)), lp(3, {2, 3, 0, 14, 28})));
}

TEST_CASE("genus-3 algorithm") {
  Field F = make_prime_field(Int(13));
  ChiResult r = algorithm2_genus3(Fe::from_int(F, 2), Fe::from_int(F, 5));
  REQUIRE(r.unique());
  CHECK(r.value() == lp(13, {0, 36, -2}));
  Field G = make_prime_field(Int(11));
  CHECK(contains(algorithm2_genus3(Fe::from_int(G, 3), Fe::from_int(G, 2)), lp(11, {0, -3, 0})));
  Field H = make_prime_field(Int(7));
  CHECK(contains(algorithm2_genus3(Fe::from_int(H, 1), Fe::from_int(H, 1)), lp(7, {-6, 30, -84})));
}

TEST_CASE("genus-4 algorithm") {
  Field F = make_prime_field(Int(17));
  CHECK(contains(algorithm3_genus4(Fe::from_int(F, 3), Fe::from_int(F, 5)), lp(17, {-8, 24, -32, 32})));
  CHECK(contains(algorithm3_genus4(Fe::from_int(F, 1), Fe::from_int(F, 2)), lp(17, {16, 128, 720, 3266})));
  Field G = make_prime_field(Int(7));
  CHECK(contains(algorithm3_genus4(Fe::from_int(G, 2), Fe::from_int(G, 3)), lp(7, {0, 8, 0, 112})));
}

TEST_CASE("ambiguous results refuse a single value") {
  ChiResult r;
  r.candidates = {lp(5, {1}), lp(5, {2})};
  try {
    r.value();
    FAIL("expected AmbiguousResult");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AmbiguousResult);
  }
}

TEST_CASE("Legendre congruences for elliptic traces") {
  for (long p : {7L, 13L, 17L}) {
    Field F = make_prime_field(Int(p));
    int holds = 0;
    for (int variant : {2, 3, 4, 6})
      for (long c = 0; c < p; ++c) {
        auto r = theorem3_check(Int(p), Fe::from_int(F, c), variant);
        CHECK(r.status != CheckStatus::Fails);
        holds += r.status == CheckStatus::Holds;
      }
    CHECK(holds > 0);
  }
}

TEST_CASE("genus-2 quotient congruences at p = 17") {
  Field F = make_prime_field(Int(17));
  int holds = 0;
  for (long rho = 0; rho < 17; ++rho) {
    auto r = sec5_congruence_check(Int(17), Fe::from_int(F, rho));
    CHECK(r.status != CheckStatus::Fails);
    if (r.status == CheckStatus::Holds) {
      ++holds;
      CHECK((r.sign == 1 || r.sign == -1));
    }
  }
  CHECK(holds >= 10);
  CHECK(sec5_congruence_check(Int(17), Fe::one(F)).status == CheckStatus::Skipped);
  CHECK_THROWS_AS(sec5_congruence_check(Int(13), Fe::one(make_prime_field(Int(13)))), Error);
}

TEST_CASE("irreducibility over Q") {
  CHECK(is_probably_irreducible({Int(49), Int(-28), Int(16), Int(-4), Int(1)}) == Irreducibility::Irreducible);
  CHECK(is_probably_irreducible(zmul({Int(7), Int(-1), Int(1)}, {Int(7), Int(-1), Int(1)})) ==
        Irreducibility::Reducible);
  CHECK(is_probably_irreducible({Int(-13), Int(0), Int(1)}) == Irreducibility::Irreducible);
  CHECK(is_probably_irreducible({Int(-4), Int(0), Int(1)}) == Irreducibility::Reducible);
}
