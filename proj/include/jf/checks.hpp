/**
 * @file checks.hpp
 * @brief Named verification checks shared by the CLI and the acceptance binary.
 *
 * Each check compares an implemented identity against an independent path
 * (exact algebra, closed form or quadrature) and reports a measured error
 * against a tolerance. Exact checks report the number of failures with
 * tolerance zero.
 */
#pragma once

#include "jf/jordan.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace jf {

enum class CheckStatus { Pass, Fail, Skip };
std::string status_str(CheckStatus s);

struct CheckRecord {
  std::string name;
  std::string anchor;  ///< the statement being verified
  CheckStatus status = CheckStatus::Skip;
  double measured = 0;
  double expected = 0;
  double tolerance = 0;
  double runtime_ms = 0;
  std::string detail;
};

struct SuiteConfig {
  std::string algebra = "minkowski:3";
  int max_degree = 4;
  int radial_order = 0;   ///< 0 selects the per-check default
  int angular_order = 0;  ///< 0 selects the per-check default
  double tol_scale = 1.0;
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;  ///< per-check overrides
  std::vector<std::string> only;             ///< run only these checks when non-empty
};

struct CheckContext {
  const Algebra& A;
  const SuiteConfig& cfg;
  double tol;  ///< effective tolerance for the running check
};

struct CheckSpec {
  std::string name;
  std::string anchor;
  double default_tol;
  std::function<bool(const Algebra&)> applies;
  std::function<CheckRecord(const CheckContext&)> run;
};

/// All checks, sorted by name.
const std::vector<CheckSpec>& check_catalogue();
const CheckSpec& find_check(const std::string& name);

/// Runs one check; exceptions become a failed record with the message as detail.
CheckRecord run_check(const CheckSpec& spec, const Algebra& A, const SuiteConfig& cfg);

struct SuiteReport {
  std::string algebra;
  std::uint64_t seed = 0;
  std::string version;
  std::vector<CheckRecord> checks;  ///< sorted by name
  bool passed() const;
  std::size_t count(CheckStatus s) const;
};

/// Runs every applicable check for cfg.algebra on the thread pool.
SuiteReport run_suite(const SuiteConfig& cfg);

/// JSON (with or without runtime fields) and CSV renderings.
std::string report_json(const SuiteReport& r, bool include_runtime = true);
std::string report_csv(const SuiteReport& r);

/// Reads a JSON config; unknown keys are rejected with std::invalid_argument.
SuiteConfig load_config(const std::string& json_text, SuiteConfig base = {});

extern const char* const kToolVersion;

}  // namespace jf
