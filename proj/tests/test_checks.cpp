/**
 * @file test_checks.cpp
 * @brief Check catalogue, configuration parsing and report rendering.
 */
#include "jf/checks.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace jf;

TEST_CASE("catalogue is sorted, unique and covers the acceptance checks") {
  const auto& cat = check_catalogue();
  CHECK(cat.size() >= 25u);
  std::set<std::string> names;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    names.insert(cat[i].name);
    CHECK_FALSE(cat[i].anchor.empty());
    CHECK(cat[i].default_tol >= 0);
    if (i) CHECK(cat[i - 1].name < cat[i].name);
  }
  CHECK(names.size() == cat.size());
  for (const char* n : {"orbit.normalization", "fock.bessel_fischer", "sb.unitarity", "sb.hermite", "inversion.unitary",
                        "heat.kernel", "harmonics.structure", "sl2.structure", "specialfn.identities",
                        "so2n.cross_check", "folding.scalar"})
    CHECK(names.count(n) == 1);
  CHECK_THROWS_AS(find_check("no.such.check"), std::invalid_argument);
}

TEST_CASE("config parsing") {
  SuiteConfig c = load_config(R"({"algebra": "symmat:3", "max_degree": 3, "seed": 42, "tol_scale": 2.0,
                                   "tolerances": {"poly.normal_form": 0.5}, "checks": ["poly.normal_form"]})");
  CHECK(c.algebra == "symmat:3");
  CHECK(c.max_degree == 3);
  CHECK(c.seed == 42u);
  CHECK(c.tol_scale == 2.0);
  CHECK(c.tolerances.at("poly.normal_form") == 0.5);
  CHECK(c.only == std::vector<std::string>{"poly.normal_form"});
  CHECK_THROWS_AS(load_config(R"({"algebra": "minkowski:3", "bogus": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(load_config(R"({"tolerances": {"nope": 1.0}})"), std::invalid_argument);
  CHECK_THROWS(load_config("not json"));
}

TEST_CASE("suite runs are deterministic without runtime fields") {
  SuiteConfig c;
  c.algebra = "rank1:1";
  c.only = {"jordan.identities", "poly.normal_form", "so2n.cross_check"};
  SuiteReport a = run_suite(c), b = run_suite(c);
  CHECK(a.passed());
  CHECK(a.count(CheckStatus::Pass) == 2u);
  CHECK(a.count(CheckStatus::Skip) == 1u);
  std::string ja = report_json(a, false);
  CHECK(ja == report_json(b, false));
  CHECK(ja.find("runtime") == std::string::npos);
  CHECK(report_json(a, true).find("runtime") != std::string::npos);
  std::string csv = report_csv(a);
  CHECK(csv.rfind("name,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("a failing tolerance is reported, not hidden") {
  SuiteConfig c;
  c.algebra = "minkowski:3";
  c.tolerances["orbit.normalization"] = 0.0;
  CheckRecord r = run_check(find_check("orbit.normalization"), Algebra::minkowski(3), c);
  CHECK(r.tolerance == 0.0);
  if (r.measured > 0) CHECK(r.status == CheckStatus::Fail);
}
