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

#include "json_io.hpp"

#include <sstream>

namespace hypercount::cli {

int exit_code(Errc c) {
  switch (c) {
    case Errc::BudgetExceeded:
      return kBudget;
    case Errc::AmbiguousResult:
      return kAmbiguous;
    case Errc::MismatchDetected:
    case Errc::NoCandidateSurvives:
    case Errc::EmptyAfterFilter:
      return kCounterexample;
    default:
      return kInputError;
  }
}

Int parse_int(const std::string& s) {
  std::string t = s;
  while (!t.empty() && t.front() == ' ') t.erase(t.begin());
  while (!t.empty() && t.back() == ' ') t.pop_back();
  bool neg = !t.empty() && t[0] == '-';
  if (neg || (!t.empty() && t[0] == '+')) t.erase(t.begin());
  int base = 10;
  if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
    t = t.substr(2);
    base = 16;
  }
  Int r;
  if (t.empty() || r.set_str(t, base) != 0) fail(Errc::InvalidArgument, "not an integer: '" + s + "'");
  return neg ? Int(-r) : r;
}

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> r;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) r.push_back(parse_int(item));
  if (r.empty()) fail(Errc::InvalidArgument, "empty coefficient list");
  return r;
}

ordered_json to_json(const Int& x) { return x.get_str(); }

ordered_json to_json(const Fe& x) {
  if (x.field()->k == 1) return x.to_int().get_str();
  ordered_json a = ordered_json::array();
  for (const auto& c : x.coeffs()) a.push_back(c.get_str());
  return a;
}

ordered_json to_json(const Poly& f) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i <= f.degree(); ++i) a.push_back(to_json(f.coeff(i)));
  return a;
}

ordered_json to_json(const Field& f) {
  ordered_json j;
  j["p"] = f->p.get_str();
  j["degree"] = f->k;
  j["q"] = f->q.get_str();
  if (f->k > 1) {
    ordered_json m = ordered_json::array();
    for (const auto& c : f->modulus) m.push_back(c.get_str());
    j["modulus"] = m;
  }
  return j;
}

ordered_json to_json(const CurveSpec& c) {
  ordered_json j;
  j["genus"] = c.g;
  j["f"] = to_json(c.f);
  return j;
}

ordered_json to_json(const LPolynomial& L) {
  ordered_json j;
  ordered_json chi = ordered_json::array();
  for (const auto& c : L.chi()) chi.push_back(c.get_str());
  j["chi"] = chi;
  j["chi_text"] = L.to_string();
  j["jacobian_order"] = L.jacobian_order().get_str();
  return j;
}

ordered_json to_json(const ChiModP& c) {
  ordered_json a = ordered_json::array();
  for (const auto& x : c.coeffs) a.push_back(x.get_str());
  return a;
}

ordered_json to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    rows.push_back(r);
  }
  return rows;
}

ordered_json to_json(const ChiResult& r) {
  ordered_json j;
  if (r.unique()) {
    ordered_json one = to_json(r.candidates[0]);
    j["chi"] = one["chi"];
    j["chi_text"] = one["chi_text"];
    j["jacobian_order"] = one["jacobian_order"];
    j["status"] = "unique";
  } else {
    ordered_json c = ordered_json::array();
    for (const auto& L : r.candidates) c.push_back(to_json(L));
    j["candidates"] = c;
    j["status"] = "ambiguous";
  }
  j["transcript"] = r.transcript;
  return j;
}

namespace {

void flatten(const ordered_json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << prefix << ":";
    for (const auto& v : j) out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
    out << "\n";
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string to_text(const ordered_json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace hypercount::cli
