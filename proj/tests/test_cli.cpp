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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(HYPERCOUNT_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("count dispatches and matches the oracle") {
  Run c = run("count --p 13 --genus 3 --a 2 --b 5");
  REQUIRE(c.code == 0);
  auto j = parse(c);
  CHECK(j["status"] == "unique");
  CHECK(j["algorithm"] == "genus3");
  CHECK(j["chi"] == nlohmann::json({"2197", "0", "468", "-2", "36", "0", "1"}));
  CHECK(j["jacobian_order"] == "2700");
  CHECK(!j["transcript"].empty());
  Run z = run("zeta-oracle --p 13 --genus 3 --a 2 --b 5");
  REQUIRE(z.code == 0);
  CHECK(parse(z)["chi"] == j["chi"]);
}

TEST_CASE("input errors exit with 1") {
  Run r = run("count --p 4 --genus 3 --a 2 --b 5");
  CHECK(r.code == 1);
  CHECK(parse(r)["error"] == "NotPrime");
  CHECK(run("count --p 13 --genus 3 --a 2 --b 0").code == 1);
  CHECK(run("count --p 13 --genus 9 --a 2 --b 1").code == 1);
  CHECK(run("count --p 13 --genus 3 --a zz --b 1").code == 1);
  CHECK(run("frobnicate").code == 1);
}

TEST_CASE("budget guard exits with 2") {
  CHECK(run("zeta-oracle --p 101 --genus 3 --a 1 --b 1 --budget 1000").code == 2);
  Run r = run("count --p 1000003 --genus 2 --a 1 --b 2 --budget 1000");
  CHECK(r.code == 2);
  CHECK(parse(r)["error"] == "BudgetExceeded");
}

TEST_CASE("hex input and raw coefficients") {
  CHECK(parse(run("zeta-oracle --p 0xd --genus 3 --a 2 --b 5"))["chi"] ==
        parse(run("zeta-oracle --p 13 --genus 3 --a 2 --b 5"))["chi"]);
  Run f = run("zeta-oracle --p 7 --f 9,0,-4,0,1 --factor 2,1");
  REQUIRE(f.code == 0);
  CHECK(parse(f)["chi_text"] == "T^4 + 4T^3 + 10T^2 + 28T + 49");
  CHECK(parse(f)["counts"] == nlohmann::json({"12", "54"}));
}

TEST_CASE("Cartier-Manin commands") {
  Run m = run("cm-matrix --p 13 --genus 2 --a 3 --b 5 --method both");
  REQUIRE(m.code == 0);
  auto j = parse(m);
  CHECK(j["equal"] == true);
  CHECK(j["naive"] == nlohmann::json::parse(R"([["3", "0"], ["0", "2"]])"));
  CHECK(j["naive"] == j["formula"]);
  Run t = run("chi-mod-p --p 13 --genus 3 --a 2 --b 5 --method table");
  REQUIRE(t.code == 0);
  Run n = run("chi-mod-p --p 13 --genus 3 --a 2 --b 5");
  CHECK(parse(t)["chi_mod_p"] == parse(n)["chi_mod_p"]);
}

TEST_CASE("decompose reports quotients and the splitting field") {
  Run d = run("decompose --p 13 --genus 3 --a 2 --b 5");
  REQUIRE(d.code == 0);
  auto j = parse(d);
  CHECK(j["holds"] == true);
  CHECK(j["X1"]["genus"] == 1);
  CHECK(j["X2"]["genus"] == 2);
  CHECK(j["splitting_field"]["degree"] == 1);
}

TEST_CASE("verification harnesses") {
  Run t = run("verify-table --genus 2 --p-max 100");
  CHECK(t.code == 0);
  CHECK(parse(t)["mismatches"] == 0);
  Run w = run("verify-table --genus 5 --p-max 5");
  CHECK(w.code == 0);
  CHECK(parse(w)["warning"] == true);
  Run c = run("verify-congruences --which thm3 --p-max 23");
  CHECK(c.code == 0);
  CHECK(parse(c)["fails"] == 0);
  Run s = run("verify-congruences --which sec5 --p 17");
  CHECK(s.code == 0);
  CHECK(parse(s)["holds"].get<int>() > 0);
  Run m = run("verify-congruences --which thm4 --p-max 40 --genus-max 5 --trials 3");
  CHECK(m.code == 0);
  Run e = run("verify-congruences --which eq4 --p-max 7 --genus-max 2 --trials 2");
  CHECK(e.code == 0);
}

TEST_CASE("identical invocations give identical output") {
  std::string args = "count --p 11 --genus 2 --a 2 --b 3 --seed 7";
  CHECK(run(args).out == run(args).out);
  CHECK(run("verify-table --genus 3 --p-max 40").out == run("verify-table --genus 3 --p-max 40").out);
}

TEST_CASE("text output") {
  Run r = run("zeta-oracle --p 13 --genus 2 --a 3 --b 5 --output text");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("jacobian_order: ") != std::string::npos);
}
