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

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypercount/errors.hpp"

namespace hypercount {

using Int = mpz_class;
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 42;

// Least non-negative residue.
Int mod(const Int& x, const Int& m);
Int ipow(const Int& b, unsigned long e);
Int random_below(Rng& rng, const Int& n);
Int isqrt(const Int& n);
bool is_probable_prime(const Int& n);
Int next_prime(const Int& n);
// d | n.
inline bool divides(const Int& d, long n) { return mpz_divisible_p(Int(n).get_mpz_t(), d.get_mpz_t()) != 0; }

struct FieldData;
using Field = std::shared_ptr<const FieldData>;

// F_p[t]/(modulus(t)); every field is stored by its absolute representation
// over F_p, with a link to the subfield it was built from.
struct FieldData {
  Int p;
  int k = 1;
  Int q;
  std::vector<Int> modulus;    // monic, ascending, size k + 1; empty when k == 1
  Field base;                  // immediate subfield, null for F_p
  std::vector<Int> gen_image;  // image of base's generator t, length k
};

Field make_prime_field(const Int& p);
Field make_extension(const Field& base, int m, std::uint64_t seed = kDefaultSeed);
Field prime_subfield(const Field& f);
bool same_field(const Field& a, const Field& b);
// True when s is f itself or lies on f's chain of bases.
bool is_subfield(const Field& s, const Field& f);
int relative_degree(const Field& s, const Field& f);

class Fe {
 public:
  Fe() = default;
  Fe(Field f, std::vector<Int> c);
  static Fe from_int(const Field& f, const Int& v);
  static Fe zero(const Field& f) { return from_int(f, 0); }
  static Fe one(const Field& f) { return from_int(f, 1); }
  // The generator t of F_p[t]/(m).
  static Fe gen(const Field& f);

  const Field& field() const { return f_; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& p() const { return f_->p; }

  bool is_zero() const;
  bool is_one() const;
  bool in_prime_field() const;
  Int to_int() const;
  // Sum c_i p^(k-1-i): ascending-coefficient lexicographic order as an integer.
  Int canonical_rank() const;
  std::string to_string() const;

  Fe& operator+=(const Fe& o);
  Fe& operator-=(const Fe& o);
  Fe& operator*=(const Fe& o);
  Fe& operator/=(const Fe& o);

 private:
  Field f_;
  std::vector<Int> c_;
};

Fe operator+(Fe a, const Fe& b);
Fe operator-(Fe a, const Fe& b);
Fe operator*(Fe a, const Fe& b);
Fe operator/(Fe a, const Fe& b);
Fe operator-(const Fe& a);
Fe operator*(const Int& s, const Fe& a);
bool operator==(const Fe& a, const Fe& b);
inline bool operator!=(const Fe& a, const Fe& b) { return !(a == b); }
bool canonical_less(const Fe& a, const Fe& b);

Fe inv(const Fe& a);
Fe pow(const Fe& a, const Int& e);
Fe frobenius(const Fe& a, int times = 1);
Fe random_element(const Field& f, Rng& rng);

int quadratic_character(const Fe& a);
int legendre_symbol(const Fe& a);
std::optional<Fe> sqrt(const Fe& a);
int nth_root_field_degree(const Fe& b, int m);
Fe nth_root(const Fe& b, int m, const Field& target);

Fe embed(const Fe& x, const Field& target);
std::optional<Fe> restrict_to(const Fe& x, const Field& sub);
Fe restrict_or_throw(const Fe& x, const Field& sub);

}  // namespace hypercount
