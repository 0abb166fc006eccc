/**
 * @file acceptance.cpp
 * @brief Runs the acceptance criteria over the desk-scale instances and prints one PASS/FAIL line each.
 *
 * Every criterion maps to one named check. Composite checks report the worst
 * error-to-tolerance ratio of their components, so their tolerance is 1.
 */
#include "jf/checks.hpp"
#include "jf/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace jf;

namespace {

struct Criterion {
  std::string id;
  std::string check;
  std::string tolerances;  ///< pinned per-component tolerances, for the log line
  std::vector<std::string> instances;
};

const std::vector<std::string> kRank1 = {"rank1:1/2", "rank1:1", "rank1:5/2"};
const std::vector<std::string> kAll = {"rank1:1/2",   "rank1:1",  "rank1:5/2", "minkowski:3",
                                       "minkowski:4", "minkowski:5", "symmat:2", "symmat:3"};

std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Criterion> criteria() {
  return {
      {"AC1", "orbit.normalization", "abs 1e-10", kAll},
      {"AC2", "fock.bessel_fischer", "rel 1e-8 numeric, exact symbolic", kRank1},
      {"AC3", "sb.unitarity", "rel 1e-6", {"minkowski:3", "minkowski:4", "symmat:2"}},
      {"AC4", "sb.hermite", "rel 1e-6", kAll},
      {"AC5", "inversion.unitary", "1e-6", join(kRank1, {"minkowski:3", "symmat:2"})},
      {"AC6", "heat.kernel", "1e-6, PDE residual 1e-4, norm bound exact", join(kRank1, {"minkowski:3", "symmat:2"})},
      {"AC7", "harmonics.structure", "exact", kAll},
      {"AC8", "sl2.structure", "exact", kAll},
      {"AC9", "specialfn.identities", "ODE 1e-6, moments 1e-8, identities exact", kAll},
      {"AC10", "so2n.cross_check", "exact", {"minkowski:3", "minkowski:4", "minkowski:5"}},
      {"AC11", "folding.scalar", "1e-6, kernel identity exact", {"symmat:2"}},
  };
}

std::string tol_str(double tol) {
  if (tol == 1.0) return "ratio<=1";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", tol);
  return buf;
}

}  // namespace

int main() {
  std::vector<Criterion> cs = criteria();
  struct Job {
    std::size_t c;
    std::string algebra;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (const auto& a : cs[i].instances) jobs.push_back({i, a});
  std::vector<CheckRecord> out(jobs.size());
  auto t0 = std::chrono::steady_clock::now();
  parallel_for(jobs.size(), [&](std::size_t j) {
    SuiteConfig cfg;
    cfg.algebra = jobs[j].algebra;
    out[j] = run_check(find_check(cs[jobs[j].c].check), Algebra::parse(jobs[j].algebra), cfg);
  });
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  int failed = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool pass = true;
    double worst = 0;
    double tol = 0;
    std::string bad, worst_detail;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      if (jobs[j].c != i) continue;
      const CheckRecord& r = out[j];
      if (r.measured >= worst) worst_detail = jobs[j].algebra + ": " + r.detail;
      worst = std::max(worst, r.measured);
      tol = r.tolerance;
      if (r.status != CheckStatus::Pass) {
        pass = false;
        bad += " " + jobs[j].algebra + "(" + status_str(r.status) + ": " + r.detail + ")";
      }
    }
    if (!pass) ++failed;
    std::printf("%-4s %s  %-22s tol=%s [%s]  measured=%.3e  instances=%zu%s\n", cs[i].id.c_str(),
                pass ? "PASS" : "FAIL", cs[i].check.c_str(), tol_str(tol).c_str(),
                cs[i].tolerances.c_str(), worst, cs[i].instances.size(), bad.c_str());
    if (tol == 1.0) std::printf("     worst %s\n", worst_detail.c_str());
  }
  std::printf("acceptance: %zu criteria, %d failed, %.1f s\n", cs.size(), failed, secs);
  return failed ? 1 : 0;
}
