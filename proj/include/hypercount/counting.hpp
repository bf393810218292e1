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

#pragma once

#include <string>
#include <vector>

#include "hypercount/curve.hpp"
#include "hypercount/descent.hpp"

namespace hypercount {

enum class TraceMethod { Naive, Bsgs };

struct TraceProvider {
  TraceMethod method = TraceMethod::Naive;
  std::uint64_t budget = kDefaultBudget;
};

// t with #E(F_q) = q + 1 - t, E: y^2 = monic cubic.
Int frobenius_trace(const CurveSpec& E, const TraceProvider& provider = {});

struct ChiResult {
  std::vector<LPolynomial> candidates;  // sorted; one entry when unique
  std::vector<std::string> transcript;

  bool unique() const { return candidates.size() == 1; }
  const LPolynomial& value() const;  // AmbiguousResult unless unique
};

struct AlgorithmOptions {
  int trials = 12;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kDefaultBudget;
  TraceProvider provider{};
  int refine_degree = 2;  // extension degree bound for breaking ties
};

// General genus 2..7 family curve via quotient twists and descent.
ChiResult algorithm1(const CurveSpec& c, const AlgorithmOptions& opt = {});
// y^2 = x^7 + a x^4 + b x over F_p, p > 3.
ChiResult algorithm2_genus3(const Fe& a, const Fe& b, const AlgorithmOptions& opt = {});
// y^2 = x^9 + a x^5 + b x over F_q.
ChiResult algorithm3_genus4(const Fe& a, const Fe& b, const AlgorithmOptions& opt = {});

enum class CheckStatus { Holds, Fails, Skipped };
std::string to_string(CheckStatus s);

struct Theorem3Result {
  CheckStatus status = CheckStatus::Skipped;
  Int lhs, rhs;  // P_m(c) and sign * t, reduced mod p
};
// variant in {2, 3, 4, 6}.
Theorem3Result theorem3_check(const Int& p, const Fe& c, int variant, const TraceProvider& provider = {});

struct Sec5Result {
  CheckStatus status = CheckStatus::Skipped;
  Int b1, b2, d;
  Int p1, p3;      // P_{(p-1)/8}(rho), P_{(3p-3)/8}(rho)
  int sign = 0;    // +1 or -1: the matching choice of sqrt(d); 0 when none
  bool degenerate = false;  // -b1 + sign sqrt(d) vanished; Vieta used
  std::string note;
};
Sec5Result sec5_congruence_check(const Int& p, const Fe& rho, std::uint64_t budget = kDefaultBudget);

enum class Irreducibility { Irreducible, Reducible, Inconclusive };
Irreducibility is_probably_irreducible(const ZPoly& chi);

}  // namespace hypercount
