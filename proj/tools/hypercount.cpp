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
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "hypercount/cartier.hpp"
#include "hypercount/counting.hpp"
#include "hypercount/decomposition.hpp"
#include "hypercount/descent.hpp"
#include "json_io.hpp"

using namespace hypercount;
using namespace hypercount::cli;

namespace {

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  int trials = 12;
  std::uint64_t budget = kDefaultBudget;
  bool stretch = false;
  std::string output = "json";
};

struct CurveArgs {
  std::string p, a, b, f;
  std::vector<std::string> factors;
  int genus = 0;
};

constexpr std::uint64_t kStretchBudget = 4294967295ULL;

int emit(const RunConfig& cfg, const ordered_json& j, int code) {
  if (cfg.output == "text")
    std::cout << to_text(j);
  else
    std::cout << j.dump(2) << "\n";
  return code;
}

std::uint64_t effective_budget(const RunConfig& cfg, bool flag_given) {
  if (cfg.stretch) return kStretchBudget;
  if (flag_given) return cfg.budget;
  if (const char* env = std::getenv("HYPERCOUNT_BUDGET")) {
    Int v = parse_int(env);
    if (v <= 0) fail(Errc::InvalidArgument, "HYPERCOUNT_BUDGET must be positive");
    return v.get_ui();
  }
  return kDefaultBudget;
}

Field prime_field(const std::string& p) {
  if (p.empty()) fail(Errc::InvalidArgument, "--p is required");
  return make_prime_field(parse_int(p));
}

Fe element(const Field& F, const std::string& s) { return Fe::from_int(F, mod(parse_int(s), F->p)); }

bool family_given(const CurveArgs& ca) { return ca.f.empty() && ca.factors.empty(); }

CurveSpec build_curve(const CurveArgs& ca) {
  Field F = prime_field(ca.p);
  if (family_given(ca)) {
    if (ca.a.empty() || ca.b.empty() || ca.genus == 0) fail(Errc::InvalidArgument, "need --genus, --a, --b or --f");
    return curve_from_ab(ca.genus, element(F, ca.a), element(F, ca.b));
  }
  Poly f = Poly::constant(Fe::one(F));
  auto from_list = [&](const std::string& s) {
    std::vector<Fe> c;
    for (const auto& x : parse_int_list(s)) c.push_back(Fe::from_int(F, mod(x, F->p)));
    return Poly(F, c);
  };
  if (!ca.f.empty()) f = f * from_list(ca.f);
  for (const auto& s : ca.factors) f = f * from_list(s);
  CurveSpec c = make_curve(f);
  if (ca.genus != 0 && ca.genus != c.g) fail(Errc::BadGenus, "--genus does not match the degree of f");
  return c;
}

// Runs fn(0..n-1) on worker threads; results land in index order.
template <class R>
std::vector<R> parallel_map(size_t n, const std::function<R(size_t)>& fn) {
  std::vector<R> out(n);
  std::vector<std::exception_ptr> errs(n);
  std::atomic<size_t> next{0};
  unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next++) < n;) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errs[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<long> primes_between(long lo, long hi) {
  std::vector<long> r;
  for (long p = std::max(3L, lo); p <= hi; ++p)
    if (is_probable_prime(Int(p))) r.push_back(p);
  return r;
}

std::uint64_t task_seed(std::uint64_t seed, long g, long p) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(g) * 1000003ULL + static_cast<std::uint64_t>(p);
}

// Random nonsingular family curve over F_p.
CurveSpec random_family_curve(int g, const Field& F, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Fe a = random_element(F, rng), b = random_element(F, rng);
    try {
      return curve_from_ab(g, a, b);
    } catch (const Error& e) {
      if (e.code() != Errc::SingularCurve) throw;
    }
  }
  fail(Errc::RetryLimit, "no nonsingular curve found");
}

std::string row_name(const TableRow& r) {
  return "p = " + std::to_string(r.residue) + " mod " + std::to_string(r.modulus);
}

int cmd_count(const CurveArgs& ca, const RunConfig& cfg) {
  AlgorithmOptions opt;
  opt.trials = cfg.trials;
  opt.seed = cfg.seed;
  opt.budget = cfg.budget;
  opt.provider.budget = cfg.budget;
  if (!family_given(ca)) fail(Errc::InvalidArgument, "count needs --genus, --a, --b");
  CurveSpec c = build_curve(ca);
  const auto& [a, b] = *c.family;
  ChiResult r;
  std::string algorithm;
  if (c.g == 3) {
    algorithm = "genus3";
    r = algorithm2_genus3(a, b, opt);
  } else if (c.g == 4) {
    algorithm = "genus4";
    r = algorithm3_genus4(a, b, opt);
  } else {
    algorithm = "general";
    r = algorithm1(c, opt);
  }
  ordered_json j;
  j["p"] = c.field->p.get_str();
  j["genus"] = c.g;
  j["algorithm"] = algorithm;
  ordered_json body = to_json(r);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return emit(cfg, j, r.unique() ? kOk : kAmbiguous);
}

int cmd_zeta(const CurveArgs& ca, const RunConfig& cfg) {
  CurveSpec c = build_curve(ca);
  std::vector<Int> counts = count_points_upto(c, c.g, cfg.budget);
  LPolynomial L = lpoly_from_counts(counts, c.field->q);
  ordered_json j;
  j["p"] = c.field->p.get_str();
  j["curve"] = to_json(c);
  ordered_json n = ordered_json::array();
  for (const auto& x : counts) n.push_back(x.get_str());
  j["counts"] = n;
  ordered_json body = to_json(L);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return emit(cfg, j, kOk);
}

int cmd_cm_matrix(const CurveArgs& ca, const RunConfig& cfg, const std::string& method) {
  CurveSpec c = build_curve(ca);
  ordered_json j;
  j["p"] = c.field->p.get_str();
  j["genus"] = c.g;
  std::optional<Matrix> naive, formula;
  if (method == "naive" || method == "both") {
    naive = cm_matrix_naive(c, cfg.budget).entries;
    j["naive"] = to_json(*naive);
  }
  if (method == "formula" || method == "both") {
    formula = cm_matrix_formula(c).entries;
    j["formula"] = to_json(*formula);
  }
  int code = kOk;
  if (naive && formula) {
    bool eq = *naive == *formula;
    j["equal"] = eq;
    if (!eq) code = kCounterexample;
  }
  return emit(cfg, j, code);
}

int cmd_chi_mod_p(const CurveArgs& ca, const RunConfig& cfg, const std::string& method) {
  CurveSpec c = build_curve(ca);
  ChiModP chi;
  if (method == "table")
    chi = chi_mod_p_table(c.g, c);
  else
    chi = chi_mod_p(c, method == "formula" ? CmMethod::Formula : CmMethod::Naive, cfg.budget);
  ordered_json j;
  j["p"] = c.field->p.get_str();
  j["genus"] = c.g;
  j["method"] = method;
  j["chi_mod_p"] = to_json(chi);
  j["chi_text"] = to_string(chi);
  if (method == "table") j["row"] = row_name(table_row(c.g, c.field->p));
  return emit(cfg, j, kOk);
}

int cmd_decompose(const CurveArgs& ca, const RunConfig& cfg) {
  CurveSpec c = build_curve(ca);
  DecompositionReport rep = decomposition_check(c, cfg.budget);
  ordered_json j;
  j["p"] = c.field->p.get_str();
  j["genus"] = c.g;
  j["splitting_field"] = to_json(rep.splitting_field);
  j["X1"] = to_json(rep.X1);
  j["X2"] = to_json(rep.X2);
  j["quotient_field"] = to_json(rep.X1.field);
  j["L_C"] = to_json(rep.LC);
  j["L_X1"] = to_json(rep.L1);
  j["L_X2"] = to_json(rep.L2);
  j["holds"] = rep.holds;
  return emit(cfg, j, kOk);
}

struct TableCase {
  ordered_json rows = ordered_json::array();
  std::vector<std::string> covered;
  int mismatches = 0;
};

int cmd_verify_table(const std::string& genus, long p_max, int trials, const RunConfig& cfg) {
  std::vector<int> gs;
  if (genus == "all")
    gs = {2, 3, 4, 5, 6, 7};
  else
    gs = {static_cast<int>(parse_int(genus).get_si())};
  for (int g : gs)
    if (g < 2 || g > 7) fail(Errc::BadGenus, "genus must be in 2..7 or all");
  std::vector<std::pair<int, long>> tasks;
  for (int g : gs)
    for (long p : primes_between(g + 1, p_max)) tasks.emplace_back(g, p);
  auto results = parallel_map<TableCase>(tasks.size(), [&](size_t i) {
    auto [g, p] = tasks[i];
    Field F = make_prime_field(Int(p));
    Rng rng(task_seed(cfg.seed, g, p));
    TableCase tc;
    std::string row = row_name(table_row(g, Int(p)));
    tc.covered.push_back(std::to_string(g) + ": " + row);
    for (int t = 0; t < trials; ++t) {
      CurveSpec c = random_family_curve(g, F, rng);
      ChiModP tab = chi_mod_p_table(g, c), naive = chi_mod_p(c, CmMethod::Naive, cfg.budget);
      bool ok = tab == naive;
      if (!ok) ++tc.mismatches;
      ordered_json r;
      r["g"] = g;
      r["p"] = std::to_string(p);
      r["a"] = to_json(c.family->first);
      r["b"] = to_json(c.family->second);
      r["row"] = row;
      r["match"] = ok;
      if (!ok) {
        r["table"] = to_string(tab);
        r["naive"] = to_string(naive);
      }
      tc.rows.push_back(r);
    }
    return tc;
  });
  ordered_json tested = ordered_json::array(), warnings = ordered_json::array();
  std::set<std::string> covered;
  int mismatches = 0;
  for (auto& tc : results) {
    for (auto& r : tc.rows) tested.push_back(r);
    covered.insert(tc.covered.begin(), tc.covered.end());
    mismatches += tc.mismatches;
  }
  for (int g : gs) {
    std::set<std::string> rows;
    for (long p : primes_between(g + 1, 2000)) rows.insert(std::to_string(g) + ": " + row_name(table_row(g, Int(p))));
    for (const auto& r : rows)
      if (!covered.count(r)) warnings.push_back("RowNotCovered: genus " + r);
  }
  ordered_json j;
  j["tested"] = tested.size();
  j["mismatches"] = mismatches;
  j["rows_covered"] = ordered_json(std::vector<std::string>(covered.begin(), covered.end()));
  j["warning"] = !warnings.empty();
  j["warnings"] = warnings;
  j["cases"] = tested;
  return emit(cfg, j, mismatches == 0 ? kOk : kCounterexample);
}

struct Tally {
  int holds = 0, fails = 0, skipped = 0;
  ordered_json items = ordered_json::array();
  ordered_json witnesses = ordered_json::array();
  void add(CheckStatus s, const ordered_json& item) {
    if (s == CheckStatus::Holds) ++holds;
    if (s == CheckStatus::Fails) {
      ++fails;
      witnesses.push_back(item);
    }
    if (s == CheckStatus::Skipped) ++skipped;
    items.push_back(item);
  }
  void merge(const Tally& o) {
    holds += o.holds;
    fails += o.fails;
    skipped += o.skipped;
    for (const auto& x : o.items) items.push_back(x);
    for (const auto& x : o.witnesses) witnesses.push_back(x);
  }
};

Tally check_thm3(long p) {
  Tally t;
  Field F = make_prime_field(Int(p));
  TraceProvider tp;
  for (int variant : {2, 3, 4, 6})
    for (long c = 0; c < p; ++c) {
      auto r = theorem3_check(Int(p), Fe::from_int(F, c), variant, tp);
      ordered_json it;
      it["p"] = std::to_string(p);
      it["variant"] = variant;
      it["c"] = std::to_string(c);
      it["status"] = to_string(r.status);
      if (r.status != CheckStatus::Skipped) {
        it["lhs"] = r.lhs.get_str();
        it["rhs"] = r.rhs.get_str();
      }
      t.add(r.status, it);
    }
  return t;
}

Tally check_sec5(long p, int samples, const RunConfig& cfg) {
  Tally t;
  Field F = make_prime_field(Int(p));
  std::vector<Int> rhos;
  if (samples <= 0 || samples >= p) {
    for (long r = 0; r < p; ++r) rhos.push_back(r);
  } else {
    Rng rng(task_seed(cfg.seed, 8, p));
    for (int i = 0; i < samples; ++i) rhos.push_back(random_below(rng, Int(p)));
  }
  for (const auto& rho : rhos) {
    auto r = sec5_congruence_check(Int(p), Fe::from_int(F, rho), cfg.budget);
    ordered_json it;
    it["p"] = std::to_string(p);
    it["rho"] = rho.get_str();
    it["status"] = to_string(r.status);
    if (r.status != CheckStatus::Skipped) {
      it["b1"] = r.b1.get_str();
      it["b2"] = r.b2.get_str();
      it["d"] = r.d.get_str();
      it["P_(p-1)/8"] = r.p1.get_str();
      it["P_(3p-3)/8"] = r.p3.get_str();
      it["sign"] = r.sign;
      it["degenerate"] = r.degenerate;
    }
    if (!r.note.empty()) it["note"] = r.note;
    t.add(r.status, it);
  }
  return t;
}

Tally check_thm4(int g, long p, int trials, const RunConfig& cfg) {
  Tally t;
  Field F = make_prime_field(Int(p));
  Rng rng(task_seed(cfg.seed, g, p));
  for (int i = 0; i < trials; ++i) {
    CurveSpec c = random_family_curve(g, F, rng);
    bool ok = cm_matrix_formula(c).entries == cm_matrix_naive(c, cfg.budget).entries;
    ordered_json it;
    it["g"] = g;
    it["p"] = std::to_string(p);
    it["a"] = to_json(c.family->first);
    it["b"] = to_json(c.family->second);
    it["sqrt_b_in_Fp"] = sqrt(c.family->second).has_value();
    it["status"] = ok ? "holds" : "fails";
    t.add(ok ? CheckStatus::Holds : CheckStatus::Fails, it);
  }
  return t;
}

Tally check_eq4(int g, long p, int trials, const RunConfig& cfg) {
  Tally t;
  Field F = make_prime_field(Int(p));
  Rng rng(task_seed(cfg.seed, g, p));
  for (int i = 0; i < trials; ++i) {
    CurveSpec c = random_family_curve(g, F, rng);
    LPolynomial L = zeta_oracle(c, cfg.budget);
    for (int k : {2, 3}) {
      ordered_json it;
      it["g"] = g;
      it["p"] = std::to_string(p);
      it["k"] = k;
      it["a"] = to_json(c.family->first);
      it["b"] = to_json(c.family->second);
      if (ipow(Int(p), g * k) > Int(static_cast<unsigned long>(cfg.budget))) {
        it["status"] = "skipped";
        it["note"] = "over budget";
        t.add(CheckStatus::Skipped, it);
        continue;
      }
      LPolynomial lhs = extend_lpoly(L, k);
      LPolynomial rhs = zeta_oracle(base_change(c, make_extension(F, k, cfg.seed)), cfg.budget);
      bool ok = lhs == rhs;
      it["status"] = ok ? "holds" : "fails";
      if (!ok) {
        it["extended"] = lhs.to_string();
        it["direct"] = rhs.to_string();
      }
      t.add(ok ? CheckStatus::Holds : CheckStatus::Fails, it);
    }
  }
  return t;
}

int cmd_verify_congruences(const std::string& which, long p_single, long p_min, long p_max, int genus_max,
                           int samples, const RunConfig& cfg) {
  std::vector<long> ps = p_single > 0 ? std::vector<long>{p_single} : primes_between(p_min, p_max);
  if (p_single > 0 && !is_probable_prime(Int(p_single))) fail(Errc::NotPrime, std::to_string(p_single) + " is not prime");
  std::vector<std::function<Tally()>> tasks;
  if (which == "thm3") {
    for (long p : ps)
      if (p > 3) tasks.push_back([p] { return check_thm3(p); });
  } else if (which == "sec5") {
    for (long p : ps)
      if (p % 8 == 1) tasks.push_back([p, samples, &cfg] { return check_sec5(p, samples, cfg); });
  } else if (which == "thm4" || which == "eq4") {
    for (int g = 2; g <= genus_max; ++g)
      for (long p : ps) {
        if (p % g == 0) continue;
        if (which == "thm4")
          tasks.push_back([g, p, &cfg] { return check_thm4(g, p, cfg.trials, cfg); });
        else
          tasks.push_back([g, p, &cfg] { return check_eq4(g, p, cfg.trials, cfg); });
      }
  } else {
    fail(Errc::InvalidArgument, "--which must be thm3, sec5, thm4 or eq4");
  }
  if (tasks.empty()) fail(Errc::InvalidArgument, "no primes in range for " + which);
  auto results = parallel_map<Tally>(tasks.size(), [&](size_t i) { return tasks[i](); });
  Tally total;
  for (const auto& t : results) total.merge(t);
  ordered_json j;
  j["which"] = which;
  j["holds"] = total.holds;
  j["fails"] = total.fails;
  j["skipped"] = total.skipped;
  j["counterexamples"] = total.witnesses;
  j["cases"] = total.items;
  return emit(cfg, j, total.fails == 0 ? kOk : kCounterexample);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius characteristic polynomials of y^2 = x^(2g+1) + a x^(g+1) + b x"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  CurveArgs ca;
  std::string method = "naive", genus_sel = "all", which;
  long p_max = 0, p_min = 3, p_single = 0;
  int trials_per_row = 5, genus_max = 7, samples = 0;

  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "random divisors / random curves per case")->capture_default_str();
  auto* budget_opt = app.add_option("--budget", cfg.budget, "largest field size enumerated (HYPERCOUNT_BUDGET)");
  app.add_flag("--stretch", cfg.stretch, "lift the enumeration budget to its hard cap");
  app.add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto curve_opts = [&](CLI::App* sub) {
    sub->add_option("--p", ca.p, "prime (decimal or 0x hex)")->required();
    sub->add_option("--genus", ca.genus, "genus 1..7");
    sub->add_option("--a", ca.a, "coefficient a");
    sub->add_option("--b", ca.b, "coefficient b");
    sub->add_option("--f", ca.f, "coefficients of f, ascending, comma separated");
    sub->add_option("--factor", ca.factors, "factor of f, ascending, comma separated (repeatable)");
  };

  auto* count = app.add_subcommand("count", "characteristic polynomial of Frobenius");
  curve_opts(count);
  auto* zeta = app.add_subcommand("zeta-oracle", "L-polynomial by point enumeration");
  curve_opts(zeta);
  auto* cm = app.add_subcommand("cm-matrix", "Cartier-Manin matrix");
  curve_opts(cm);
  cm->add_option("--method", method, "naive, formula or both")->check(CLI::IsMember({"naive", "formula", "both"}));
  auto* chi = app.add_subcommand("chi-mod-p", "characteristic polynomial modulo p");
  curve_opts(chi);
  chi->add_option("--method", method, "naive, formula or table")->check(CLI::IsMember({"naive", "formula", "table"}));
  auto* dec = app.add_subcommand("decompose", "quotient curves and the split L-polynomial");
  curve_opts(dec);

  auto* vt = app.add_subcommand("verify-table", "compare tabulated forms with the naive expansion");
  vt->add_option("--genus", genus_sel, "2..7 or all")->capture_default_str();
  vt->add_option("--p-max", p_max, "largest prime")->required();
  vt->add_option("--trials-per-row", trials_per_row, "random curves per prime")->capture_default_str();

  auto* vc = app.add_subcommand("verify-congruences", "sweep congruence identities");
  vc->add_option("--which", which, "thm3, sec5, thm4 or eq4")->required()->check(
      CLI::IsMember({"thm3", "sec5", "thm4", "eq4"}));
  vc->add_option("--p", p_single, "single prime");
  vc->add_option("--p-min", p_min, "smallest prime")->capture_default_str();
  vc->add_option("--p-max", p_max, "largest prime");
  vc->add_option("--genus-max", genus_max, "largest genus (thm4, eq4)")->capture_default_str();
  vc->add_option("--samples", samples, "random rho per prime for sec5 (0 = all)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    cfg.budget = effective_budget(cfg, budget_opt->count() > 0);
    if (cfg.trials < 1) fail(Errc::InvalidArgument, "--trials must be >= 1");
    if (*count) return cmd_count(ca, cfg);
    if (*zeta) return cmd_zeta(ca, cfg);
    if (*cm) return cmd_cm_matrix(ca, cfg, cm->count("--method") ? method : "both");
    if (*chi) return cmd_chi_mod_p(ca, cfg, method);
    if (*dec) return cmd_decompose(ca, cfg);
    if (*vt) return cmd_verify_table(genus_sel, p_max, trials_per_row, cfg);
    if (*vc) {
      if (p_single == 0 && p_max == 0) fail(Errc::InvalidArgument, "--p or --p-max is required");
      return cmd_verify_congruences(which, p_single, p_min, p_max, genus_max, samples, cfg);
    }
  } catch (const Error& e) {
    ordered_json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    std::cerr << e.what() << "\n";
    return emit(cfg, j, exit_code(e.code()));
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
