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

#include <vector>

#include "hypercount/curve.hpp"

namespace hypercount {

using Matrix = std::vector<std::vector<Fe>>;

// W = (c_{ip-j}), 1 <= i, j <= g, stored zero-based.
struct CMMatrix {
  CurveSpec curve;
  Matrix entries;
};

CMMatrix cm_matrix_naive(const CurveSpec& c, std::uint64_t budget = kDefaultBudget);
CMMatrix cm_matrix_formula(const CurveSpec& c);

// (W^t) (W^t)^(p) ... (W^t)^(p^(n-1)).
Matrix wp_product(const CMMatrix& W, int n);
// Monic characteristic polynomial, ascending coefficients.
std::vector<Fe> charpoly(const Matrix& m);

// Degree-2g polynomial over F_p, ascending, coefficients in [0, p).
struct ChiModP {
  Int p;
  int g = 0;
  std::vector<Int> coeffs;
};
bool operator==(const ChiModP& x, const ChiModP& y);
std::string to_string(const ChiModP& c);

enum class CmMethod { Naive, Formula };

ChiModP chi_mod_p(const CurveSpec& c, CmMethod method = CmMethod::Naive,
                  std::uint64_t budget = kDefaultBudget);
ChiModP chi_mod_p_from_lpoly(const LPolynomial& L);

// (A p + B) / D, raised to exp.
struct LegendreIndex {
  int A, B, D, exp = 1;
};
// (T^deg - b_i^pow prod P_idx^exp)^mult.
struct TableFactor {
  int deg, i, pow;
  std::vector<LegendreIndex> legendre;
  int mult = 1;
};
struct TableRow {
  int g, modulus, residue;
  std::vector<TableFactor> factors;
};

const TableRow& table_row(int g, const Int& p);
// Factor degrees counted with multiplicity, ascending; the T^g factor is omitted.
std::vector<int> table_factor_degrees(int g, const Int& p);
ChiModP chi_mod_p_table(int g, const CurveSpec& c);
// sqrt(b)^((p-1)/i) for the chosen sqrt(b).
Fe twist_factor(int i, const Fe& sqrt_b);

struct PermutationStructure {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cycle_type;  // ascending
};
// Cycles of i -> i P - (P - 1)/2 mod g on residues 0..g-1, P = p^n.
PermutationStructure permutation_structure(int g, const Int& p, int n);

}  // namespace hypercount
