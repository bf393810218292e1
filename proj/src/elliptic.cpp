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

#include <map>
#include <optional>
#include <set>

#include "hypercount/counting.hpp"

namespace hypercount {

namespace {

// Affine point on y^2 = x^3 + A x^2 + B x + C; nullopt is the point at infinity.
struct Pt {
  Fe x, y;
};
using OPt = std::optional<Pt>;

struct Ell {
  Fe A, B, C;

  OPt add(const OPt& P, const OPt& Q) const {
    if (!P) return Q;
    if (!Q) return P;
    Fe lam;
    if (P->x == Q->x) {
      if ((P->y + Q->y).is_zero()) return std::nullopt;
      Fe x = P->x;
      lam = (Int(3) * x * x + Int(2) * A * x + B) / (Int(2) * P->y);
    } else {
      lam = (Q->y - P->y) / (Q->x - P->x);
    }
    Fe x3 = lam * lam - A - P->x - Q->x;
    Fe y3 = lam * (P->x - x3) - P->y;
    return Pt{x3, y3};
  }

  OPt neg(const OPt& P) const {
    if (!P) return P;
    return Pt{P->x, -P->y};
  }

  OPt mul(Int n, OPt P) const {
    if (n < 0) {
      n = -n;
      P = neg(P);
    }
    OPt r;
    size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = add(r, r);
      if (mpz_tstbit(n.get_mpz_t(), i)) r = add(r, P);
    }
    return r;
  }
};

using Key = std::pair<std::vector<Int>, std::vector<Int>>;
Key key(const OPt& P) {
  if (!P) return {{}, {}};
  return {P->x.coeffs(), P->y.coeffs()};
}

// All m in [lo, hi] with m P = O.
std::set<Int> killing_multiples(const Ell& E, const OPt& P, const Int& lo, const Int& hi) {
  Int width = hi - lo + 1;
  Int s = isqrt(width) + 1;
  std::map<Key, std::vector<long>> baby;
  OPt cur;
  for (long j = 0; j < s; ++j) {
    baby[key(cur)].push_back(j);
    cur = E.add(cur, P);
  }
  OPt step = E.neg(E.mul(s, P));
  OPt giant = E.neg(E.mul(lo, P));
  std::set<Int> out;
  for (Int i = 0; i * s < width; ++i) {
    auto it = baby.find(key(giant));
    if (it != baby.end())
      for (long j : it->second) {
        Int m = lo + i * s + j;
        if (m <= hi) out.insert(m);
      }
    giant = E.add(giant, step);
  }
  return out;
}

std::optional<Int> bsgs_order(const CurveSpec& c) {
  const Field& F = c.field;
  Ell E{c.f.coeff(2), c.f.coeff(1), c.f.coeff(0)};
  const Int& q = F->q;
  Int w = isqrt(4 * q) + 1;
  Int lo = q + 1 - w, hi = q + 1 + w;
  Rng rng(kDefaultSeed);
  std::optional<std::set<Int>> cand;
  for (int attempt = 0; attempt < 40; ++attempt) {
    Fe x = random_element(F, rng);
    auto y = sqrt(eval(c.f, x));
    if (!y) continue;
    auto ks = killing_multiples(E, Pt{x, *y}, lo, hi);
    if (!cand) {
      cand = ks;
    } else {
      std::set<Int> both;
      for (const Int& m : ks)
        if (cand->count(m)) both.insert(m);
      cand = both;
    }
    if (cand->size() == 1) return *cand->begin();
    if (cand->empty()) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Int frobenius_trace(const CurveSpec& E, const TraceProvider& provider) {
  require(E.g == 1, "frobenius_trace needs a genus-1 curve");
  const Int& q = E.field->q;
  if (provider.method == TraceMethod::Bsgs) {
    if (auto n = bsgs_order(E)) return q + 1 - *n;
  }
  return q + 1 - count_points(E, 1, provider.budget);
}

}  // namespace hypercount
