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

#include "hypercount/cartier.hpp"
#include "hypercount/counting.hpp"
#include "hypercount/curve.hpp"
#include "json.hpp"

namespace hypercount::cli {

using nlohmann::ordered_json;

enum Exit { kOk = 0, kInputError = 1, kBudget = 2, kAmbiguous = 3, kCounterexample = 4 };

int exit_code(Errc c);

// Decimal, or hexadecimal with a 0x prefix; optional leading minus sign.
Int parse_int(const std::string& s);
// Comma separated integers, ascending degree.
std::vector<Int> parse_int_list(const std::string& s);

ordered_json to_json(const Int& x);
ordered_json to_json(const Fe& x);
ordered_json to_json(const Poly& f);
ordered_json to_json(const Field& f);
ordered_json to_json(const CurveSpec& c);
ordered_json to_json(const LPolynomial& L);
ordered_json to_json(const ChiModP& c);
ordered_json to_json(const Matrix& m);
ordered_json to_json(const ChiResult& r);

// Human-readable rendering of a report; nested values are flattened to key: value lines.
std::string to_text(const ordered_json& j);

}  // namespace hypercount::cli
