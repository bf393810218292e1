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

#include <cstdint>
#include <vector>

#include "hypercount/curve.hpp"

namespace hypercount {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
constexpr u32 kZero = 0xffffffffu;

// Zech-logarithm tables for a small F_Q, elements indexed by sum c_i p^i.
class LogField {
 public:
  explicit LogField(const Field& F) : p_(F->p.get_ui()), k_(F->k), Q_(F->q.get_ui()), n_(Q_ - 1) {
    for (int i = 0; i < k_; ++i) mod_.push_back(k_ == 1 ? 0 : F->modulus[i].get_ui());
    std::vector<u64> gamma = primitive();
    log_.assign(Q_, kZero);
    std::vector<u32> exp(n_);
    std::vector<u64> cur(k_, 0);
    cur[0] = 1;
    for (u64 i = 0; i < n_; ++i) {
      u64 idx = index(cur);
      exp[i] = static_cast<u32>(idx);
      log_[idx] = static_cast<u32>(i);
      cur = mul(cur, gamma);
    }
    zech_.resize(n_);
    for (u64 i = 0; i < n_; ++i) {
      u64 v = exp[i];
      u64 d0 = v % p_;
      u64 w = d0 == p_ - 1 ? v - (p_ - 1) : v + 1;
      zech_[i] = w == 0 ? kZero : log_[w];
    }
  }

  u32 log_of(const Fe& x) const {
    u64 idx = 0, pw = 1;
    for (int i = 0; i < k_; ++i) {
      idx += x.coeffs()[i].get_ui() * pw;
      pw *= p_;
    }
    return log_[idx];
  }

  // Sum over x in F_Q of the quadratic character of f(x).
  long char_sum(const std::vector<u32>& lc) const {
    const int d = static_cast<int>(lc.size()) - 1;
    long s = 0;
    auto chi = [](u32 v) { return v == kZero ? 0 : ((v & 1u) ? -1 : 1); };
    s += chi(lc[0]);
    for (u64 lx = 0; lx < n_; ++lx) {
      u32 r = lc[d];
      for (int i = d - 1; i >= 0; --i) {
        if (r != kZero) {
          u64 t = static_cast<u64>(r) + lx;
          r = static_cast<u32>(t >= n_ ? t - n_ : t);
        }
        u32 c = lc[i];
        if (c == kZero) continue;
        if (r == kZero) {
          r = c;
          continue;
        }
        u64 diff = r >= c ? r - c : r + n_ - c;
        u32 z = zech_[diff];
        if (z == kZero) {
          r = kZero;
        } else {
          u64 t = static_cast<u64>(c) + z;
          r = static_cast<u32>(t >= n_ ? t - n_ : t);
        }
      }
      s += chi(r);
    }
    return s;
  }

 private:
  u64 index(const std::vector<u64>& v) const {
    u64 idx = 0, pw = 1;
    for (int i = 0; i < k_; ++i) {
      idx += v[i] * pw;
      pw *= p_;
    }
    return idx;
  }

  std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b) const {
    if (k_ == 1) return {static_cast<u64>((static_cast<unsigned __int128>(a[0]) * b[0]) % p_)};
    std::vector<unsigned __int128> r(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) r[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    for (int i = 2 * k_ - 2; i >= k_; --i) {
      u64 t = static_cast<u64>(r[i] % p_);
      if (t == 0) continue;
      for (int j = 0; j < k_; ++j) r[i - k_ + j] += static_cast<unsigned __int128>(p_ - t) * mod_[j];
    }
    std::vector<u64> out(k_);
    for (int i = 0; i < k_; ++i) out[i] = static_cast<u64>(r[i] % p_);
    return out;
  }

  std::vector<u64> powv(std::vector<u64> b, u64 e) const {
    std::vector<u64> r(k_, 0);
    r[0] = 1;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  std::vector<u64> primitive() const {
    std::vector<u64> primes;
    u64 m = n_;
    for (u64 d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    if (m > 1) primes.push_back(m);
    for (u64 cand = 2; cand < Q_; ++cand) {
      std::vector<u64> g(k_);
      u64 c = cand;
      for (int i = 0; i < k_; ++i) {
        g[i] = c % p_;
        c /= p_;
      }
      bool ok = true;
      for (u64 r : primes) {
        auto t = powv(g, n_ / r);
        bool one = t[0] == 1;
        for (int i = 1; i < k_ && one; ++i) one = t[i] == 0;
        if (one) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    fail(Errc::MismatchDetected, "no primitive element found");
  }

  u64 p_;
  int k_;
  u64 Q_, n_;
  std::vector<u64> mod_;
  std::vector<u32> log_;
  std::vector<u32> zech_;
};

Int count_over(const CurveSpec& c, const Field& E) {
  LogField lf(E);
  Poly fe = embed(c.f, E);
  std::vector<u32> lc;
  for (int i = 0; i <= fe.degree(); ++i) lc.push_back(lf.log_of(fe.coeff(i)));
  long s = lf.char_sum(lc);
  return E->q + 1 + s;
}

void check_budget(const Int& Q, std::uint64_t budget) {
  if (Q > Int(static_cast<unsigned long>(budget)) || Q >= Int(4294967295UL))
    fail(Errc::BudgetExceeded, "field of size " + Q.get_str() + " exceeds enumeration budget " + std::to_string(budget));
}

}  // namespace

Int count_points(const CurveSpec& c, int k, std::uint64_t budget) {
  require(k >= 1, "count_points: k must be >= 1");
  check_budget(ipow(c.field->q, k), budget);
  return count_over(c, make_extension(c.field, k));
}

std::vector<Int> count_points_upto(const CurveSpec& c, int n, std::uint64_t budget) {
  check_budget(ipow(c.field->q, n), budget);
  std::vector<Int> r;
  for (int k = 1; k <= n; ++k) r.push_back(count_over(c, make_extension(c.field, k)));
  return r;
}

}  // namespace hypercount
