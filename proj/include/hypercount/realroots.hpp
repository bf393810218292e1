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

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <utility>
#include <vector>

#include "hypercount/lpoly.hpp"

namespace hypercount {

using Real = boost::multiprecision::cpp_bin_float_100;

Real to_real(const Int& x);
Int round_to_int(const Real& x);

// Yun decomposition over Q: primitive squarefree factors with multiplicities.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& h);

// Roots of a squarefree integer polynomial whose roots are all real, ascending.
std::vector<Real> real_roots(const ZPoly& h);

}  // namespace hypercount
