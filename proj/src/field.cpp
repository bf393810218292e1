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

#include "hypercount/field.hpp"

#include <algorithm>

#include "hypercount/poly.hpp"

namespace hypercount {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroRadicand: return "ZeroRadicand";
    case Errc::NoRootInField: return "NoRootInField";
    case Errc::NotPrimeField: return "NotPrimeField";
    case Errc::NotInSubfield: return "NotInSubfield";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::IndexTooLargeForCharacteristic: return "IndexTooLargeForCharacteristic";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::BadGenus: return "BadGenus";
    case Errc::CharacteristicDividesGenus: return "CharacteristicDividesGenus";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::UnsupportedGenus: return "UnsupportedGenus";
    case Errc::RowNotApplicable: return "RowNotApplicable";
    case Errc::NoSolution: return "NoSolution";
    case Errc::NoCandidateSurvives: return "NoCandidateSurvives";
    case Errc::AmbiguousResult: return "AmbiguousResult";
    case Errc::EmptyAfterFilter: return "EmptyAfterFilter";
    case Errc::RootUnavailable: return "RootUnavailable";
    case Errc::EvenGenus: return "EvenGenus";
    case Errc::MismatchDetected: return "MismatchDetected";
    case Errc::SingularSpecialization: return "SingularSpecialization";
    case Errc::NonResidueDiscriminant: return "NonResidueDiscriminant";
    case Errc::RetryLimit: return "RetryLimit";
  }
  return "Unknown";
}

Int mod(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Int random_below(Rng& rng, const Int& n) {
  if (n <= 1) return 0;
  size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
  Int r = 0;
  for (size_t i = 0; i < words; ++i) {
    r <<= 64;
    std::uint64_t w = rng();
    r += Int(static_cast<unsigned long>(w >> 32)) * Int(4294967296UL) +
         Int(static_cast<unsigned long>(w & 0xffffffffUL));
  }
  return mod(r, n);
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_probable_prime(const Int& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Int next_prime(const Int& n) {
  Int r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Field make_prime_field(const Int& p) {
  if (p == 2) fail(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_probable_prime(p)) fail(Errc::NotPrime, p.get_str() + " is not prime");
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->k = 1;
  d->q = p;
  return d;
}

Field prime_subfield(const Field& f) {
  Field c = f;
  while (c->base) c = c->base;
  return c;
}

bool same_field(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->p == b->p && a->k == b->k && a->modulus == b->modulus;
}

bool is_subfield(const Field& s, const Field& f) {
  if (s->k == 1 && s->p == f->p) return true;
  for (Field c = f; c; c = c->base)
    if (same_field(c, s)) return true;
  return false;
}

int relative_degree(const Field& s, const Field& f) {
  require(is_subfield(s, f), "relative_degree: not a subfield");
  return f->k / s->k;
}

Field make_extension(const Field& base, int m, std::uint64_t seed) {
  require(m >= 1, "make_extension: degree must be >= 1");
  if (m == 1) return base;
  const int K = base->k * m;
  Field fp = prime_subfield(base);
  Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(K));
  Poly mpoly;
  for (;;) {
    std::vector<Int> c(K + 1);
    for (int i = 0; i < K; ++i) c[i] = random_below(rng, base->p);
    c[K] = 1;
    if (c[0] == 0) continue;
    mpoly = Poly::from_ints(fp, c);
    if (is_irreducible(mpoly)) break;
  }
  auto d = std::make_shared<FieldData>();
  d->p = base->p;
  d->k = K;
  d->q = ipow(base->p, K);
  for (const Fe& c : mpoly.coeffs()) d->modulus.push_back(c.to_int());
  d->base = base;
  if (base->k > 1) {
    Field ef = d;
    std::vector<Fe> bc;
    for (const Int& c : base->modulus) bc.push_back(Fe::from_int(ef, c));
    Rng rr(seed);
    auto roots = find_roots(Poly(ef, bc), rr);
    if (roots.empty()) fail(Errc::MismatchDetected, "base modulus has no root in extension");
    d->gen_image = roots.front().coeffs();
  }
  return d;
}

// ---------------------------------------------------------------------------

namespace {

using Vec = std::vector<Int>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void check_same(const Fe& a, const Fe& b) {
  if (a.field() == b.field()) return;
  if (!same_field(a.field(), b.field())) fail(Errc::FieldMismatch, "operands live in different fields");
}

// Polynomials over F_p used for inversion in F_p[t]/(m).
std::pair<Vec, Vec> fp_divmod(Vec a, const Vec& b, const Int& p) {
  trim(a);
  Vec q;
  if (a.size() < b.size()) return {q, a};
  Int lcinv;
  mpz_invert(lcinv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
  q.assign(a.size() - b.size() + 1, 0);
  for (size_t i = a.size(); i-- >= b.size();) {
    Int t = mod(a[i] * lcinv, p);
    q[i - b.size() + 1] = t;
    if (t != 0)
      for (size_t j = 0; j < b.size(); ++j) a[i - b.size() + 1 + j] = mod(a[i - b.size() + 1 + j] - t * b[j], p);
    if (i == 0) break;
  }
  trim(a);
  return {q, a};
}

Vec fp_mul(const Vec& a, const Vec& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  for (auto& x : r) x = mod(x, p);
  trim(r);
  return r;
}

Vec fp_sub(const Vec& a, const Vec& b, const Int& p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
  trim(r);
  return r;
}

Vec fp_inverse_mod(const Vec& a, const Vec& m, const Int& p) {
  Vec r0 = m, r1 = a, s0, s1{1};
  trim(r1);
  if (r1.empty()) fail(Errc::DivisionByZero, "inverse of zero");
  while (!r1.empty()) {
    auto [qt, rr] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(rr);
    Vec ns = fp_sub(s0, fp_mul(qt, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  Int cinv;
  mpz_invert(cinv.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
  for (auto& x : s0) x = mod(x * cinv, p);
  return s0;
}

std::vector<Field> chain_of(const Field& f) {
  std::vector<Field> c;
  for (Field x = f; x; x = x->base) c.push_back(x);
  return c;
}

Fe embed_step(const Fe& x, const Field& up) {
  const Field& down = up->base;
  if (down->k == 1) return Fe::from_int(up, x.coeffs()[0]);
  Fe g(up, up->gen_image);
  Fe r = Fe::zero(up);
  const auto& c = x.coeffs();
  for (size_t i = c.size(); i-- > 0;) r = r * g + Fe::from_int(up, c[i]);
  return r;
}

std::optional<Fe> restrict_step(const Fe& x, const Field& up) {
  const Field& down = up->base;
  const Int& p = up->p;
  if (down->k == 1) {
    for (int i = 1; i < up->k; ++i)
      if (x.coeffs()[i] != 0) return std::nullopt;
    return Fe::from_int(down, x.coeffs()[0]);
  }
  const int n = down->k, K = up->k;
  // Columns: images of t^i, i < n; augmented with x.
  std::vector<Vec> cols;
  Fe g(up, up->gen_image), pw = Fe::one(up);
  for (int i = 0; i < n; ++i) {
    cols.push_back(pw.coeffs());
    pw = pw * g;
  }
  std::vector<Vec> mat(K, Vec(n + 1));
  for (int r = 0; r < K; ++r) {
    for (int c = 0; c < n; ++c) mat[r][c] = cols[c][r];
    mat[r][n] = x.coeffs()[r];
  }
  int row = 0;
  std::vector<int> pivcol;
  for (int c = 0; c < n && row < K; ++c) {
    int piv = -1;
    for (int r = row; r < K; ++r)
      if (mat[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(mat[piv], mat[row]);
    Int iv;
    mpz_invert(iv.get_mpz_t(), mat[row][c].get_mpz_t(), p.get_mpz_t());
    for (auto& e : mat[row]) e = mod(e * iv, p);
    for (int r = 0; r < K; ++r) {
      if (r == row || mat[r][c] == 0) continue;
      Int t = mat[r][c];
      for (int cc = 0; cc <= n; ++cc) mat[r][cc] = mod(mat[r][cc] - t * mat[row][cc], p);
    }
    pivcol.push_back(c);
    ++row;
  }
  for (int r = row; r < K; ++r)
    if (mat[r][n] != 0) return std::nullopt;
  Vec sol(n, 0);
  for (int r = 0; r < row; ++r) sol[pivcol[r]] = mat[r][n];
  return Fe(down, sol);
}

}  // namespace

// ---------------------------------------------------------------------------

Fe::Fe(Field f, std::vector<Int> c) : f_(std::move(f)), c_(std::move(c)) {
  c_.resize(f_->k, 0);
  for (auto& x : c_)
    if (x < 0 || x >= f_->p) x = mod(x, f_->p);
}

Fe Fe::from_int(const Field& f, const Int& v) {
  std::vector<Int> c(f->k, 0);
  c[0] = v;
  return Fe(f, std::move(c));
}

Fe Fe::gen(const Field& f) {
  if (f->k == 1) return one(f);
  std::vector<Int> c(f->k, 0);
  c[1] = 1;
  return Fe(f, std::move(c));
}

bool Fe::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Fe::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Fe::in_prime_field() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Int Fe::to_int() const {
  if (!in_prime_field()) fail(Errc::NotPrimeField, "element is not in the prime field");
  return c_[0];
}

Int Fe::canonical_rank() const {
  Int r = 0;
  for (const auto& x : c_) r = r * f_->p + x;
  return r;
}

std::string Fe::to_string() const {
  if (f_->k == 1) return c_[0].get_str();
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + c_[i].get_str();
  return s + "]";
}

Fe& Fe::operator+=(const Fe& o) {
  check_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= f_->p) c_[i] -= f_->p;
  }
  return *this;
}

Fe& Fe::operator-=(const Fe& o) {
  check_same(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] -= o.c_[i];
    if (c_[i] < 0) c_[i] += f_->p;
  }
  return *this;
}

Fe& Fe::operator*=(const Fe& o) {
  check_same(*this, o);
  const Int& p = f_->p;
  const int k = f_->k;
  if (k == 1) {
    c_[0] *= o.c_[0];
    mpz_fdiv_r(c_[0].get_mpz_t(), c_[0].get_mpz_t(), p.get_mpz_t());
    return *this;
  }
  std::vector<Int> r(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < k; ++j) mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  const auto& m = f_->modulus;
  Int t;
  for (int i = 2 * k - 2; i >= k; --i) {
    mpz_fdiv_r(t.get_mpz_t(), r[i].get_mpz_t(), p.get_mpz_t());
    if (t == 0) continue;
    for (int j = 0; j < k; ++j) mpz_submul(r[i - k + j].get_mpz_t(), t.get_mpz_t(), m[j].get_mpz_t());
  }
  for (int i = 0; i < k; ++i) mpz_fdiv_r(c_[i].get_mpz_t(), r[i].get_mpz_t(), p.get_mpz_t());
  return *this;
}

Fe& Fe::operator/=(const Fe& o) { return *this *= inv(o); }

Fe operator+(Fe a, const Fe& b) { return a += b; }
Fe operator-(Fe a, const Fe& b) { return a -= b; }
Fe operator*(Fe a, const Fe& b) { return a *= b; }
Fe operator/(Fe a, const Fe& b) { return a /= b; }
Fe operator-(const Fe& a) { return Fe::zero(a.field()) - a; }
Fe operator*(const Int& s, const Fe& a) {
  std::vector<Int> c = a.coeffs();
  for (auto& x : c) x *= s;
  return Fe(a.field(), std::move(c));
}

bool operator==(const Fe& a, const Fe& b) { return same_field(a.field(), b.field()) && a.coeffs() == b.coeffs(); }

bool canonical_less(const Fe& a, const Fe& b) { return a.coeffs() < b.coeffs(); }

Fe inv(const Fe& a) {
  if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  const Field& f = a.field();
  if (f->k == 1) {
    Int r;
    mpz_invert(r.get_mpz_t(), a.coeffs()[0].get_mpz_t(), f->p.get_mpz_t());
    return Fe(f, {r});
  }
  return Fe(f, fp_inverse_mod(a.coeffs(), f->modulus, f->p));
}

Fe pow(const Fe& a, const Int& e) {
  if (e < 0) return pow(inv(a), -e);
  Fe r = Fe::one(a.field());
  if (e == 0) return r;
  Fe b = a;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r *= r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r *= b;
  }
  return r;
}

Fe frobenius(const Fe& a, int times) {
  Fe r = a;
  int k = a.field()->k;
  times = ((times % k) + k) % k;
  for (int i = 0; i < times; ++i) r = pow(r, a.p());
  return r;
}

Fe random_element(const Field& f, Rng& rng) {
  std::vector<Int> c(f->k);
  for (auto& x : c) x = random_below(rng, f->p);
  return Fe(f, std::move(c));
}

int quadratic_character(const Fe& a) {
  if (a.is_zero()) return 0;
  Fe r = pow(a, (a.field()->q - 1) / 2);
  return r.is_one() ? 1 : -1;
}

int legendre_symbol(const Fe& a) {
  if (a.field()->k != 1) fail(Errc::NotPrimeField, "legendre_symbol needs a prime field");
  return mpz_legendre(a.coeffs()[0].get_mpz_t(), a.p().get_mpz_t());
}

std::optional<Fe> sqrt(const Fe& a) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  if (quadratic_character(a) != 1) return std::nullopt;
  Int qm1 = f->q - 1;
  unsigned long s = mpz_scan1(qm1.get_mpz_t(), 0);
  Int t = qm1 >> s;
  Rng rng(0x5eedULL);
  Fe z = Fe::from_int(f, 2);
  while (quadratic_character(z) != -1) z = random_element(f, rng);
  Fe c = pow(z, t);
  Fe x = pow(a, (t + 1) / 2);
  Fe b = pow(a, t);
  unsigned long m = s;
  while (!b.is_one()) {
    unsigned long i = 0;
    Fe bb = b;
    while (!bb.is_one()) {
      bb *= bb;
      ++i;
    }
    Fe w = c;
    for (unsigned long j = 0; j + 1 < m - i; ++j) w *= w;
    x *= w;
    c = w * w;
    b *= c;
    m = i;
  }
  Fe y = -x;
  return canonical_less(y, x) ? y : x;
}

int nth_root_field_degree(const Fe& b, int m) {
  require(m >= 1, "nth_root_field_degree: m must be >= 1");
  if (b.is_zero()) fail(Errc::ZeroRadicand, "radicand is zero");
  const Int& q = b.field()->q;
  Int qk = 1;
  for (int k = 1; k <= 4096; ++k) {
    qk *= q;
    Int e = qk - 1, d;
    mpz_gcd_ui(d.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(m));
    Int ex = mod(e / d, q - 1);
    if (pow(b, ex).is_one()) return k;
  }
  fail(Errc::NoRootInField, "no root found within degree bound");
}

Fe nth_root(const Fe& b, int m, const Field& target) {
  require(m >= 1, "nth_root: m must be >= 1");
  Fe be = embed(b, target);
  if (be.is_zero()) return be;
  Poly f = Poly::monomial(Fe::one(target), m) - Poly::constant(be);
  Rng rng(kDefaultSeed);
  auto roots = find_roots(f, rng);
  if (roots.empty()) fail(Errc::NoRootInField, "x^" + std::to_string(m) + " - b has no root in target field");
  return roots.front();
}

Fe embed(const Fe& x, const Field& target) {
  if (same_field(x.field(), target)) return x.field() == target ? x : Fe(target, x.coeffs());
  auto ch = chain_of(target);
  int j = -1;
  for (size_t i = 0; i < ch.size(); ++i)
    if (same_field(ch[i], x.field())) { j = static_cast<int>(i); break; }
  if (j < 0) {
    if (x.field()->k == 1 && x.p() == target->p) return Fe::from_int(target, x.coeffs()[0]);
    fail(Errc::FieldMismatch, "source field is not a subfield of the target");
  }
  Fe r(ch[j], x.coeffs());
  for (int i = j - 1; i >= 0; --i) r = embed_step(r, ch[i]);
  return r;
}

std::optional<Fe> restrict_to(const Fe& x, const Field& sub) {
  if (same_field(x.field(), sub)) return Fe(sub, x.coeffs());
  auto ch = chain_of(x.field());
  int j = -1;
  for (size_t i = 0; i < ch.size(); ++i)
    if (same_field(ch[i], sub)) { j = static_cast<int>(i); break; }
  if (j < 0) {
    if (sub->k == 1 && sub->p == x.p()) {
      if (!x.in_prime_field()) return std::nullopt;
      return Fe::from_int(sub, x.coeffs()[0]);
    }
    fail(Errc::FieldMismatch, "target is not a subfield");
  }
  Fe r = x;
  for (int i = 0; i < j; ++i) {
    auto s = restrict_step(r, ch[i]);
    if (!s) return std::nullopt;
    r = *s;
  }
  return Fe(sub, r.coeffs());
}

Fe restrict_or_throw(const Fe& x, const Field& sub) {
  auto r = restrict_to(x, sub);
  if (!r) fail(Errc::NotInSubfield, "value does not lie in the requested subfield");
  return *r;
}

}  // namespace hypercount
