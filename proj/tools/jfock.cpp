/**
 * @file jfock.cpp
 * @brief Command-line entry point: verification suites, transforms on sampled data,
 *        kernel tables and quadrature export.
 */
#include "jf/checks.hpp"
#include "jf/heat.hpp"
#include "jf/orbit.hpp"
#include "jf/specialfn.hpp"
#include "jf/transforms.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using jf::cplx;

/// Usage and configuration errors map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// ---- CSV ----

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  }
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Table read_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  Table t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (t.header.empty()) {
      t.header = split_csv_line(line);
      continue;
    }
    auto row = split_csv_line(line);
    row.resize(t.header.size());
    t.rows.push_back(row);
  }
  if (t.header.empty()) throw UsageError(path + ": missing header");
  return t;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

int require_col(const Table& t, const std::string& name, const std::string& file) {
  int c = t.col(name);
  if (c < 0) throw UsageError(file + ": missing column " + name);
  return c;
}

double parse_num(const std::string& s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
  return v;
}

// ---- sampled functions on Xi ----

/// Rows of x0..x{n-1}, weight, f_re[, f_im]; rows with an error entry are ignored.
struct Samples {
  jf::Quadrature q;
  std::vector<cplx> f;
  std::vector<std::string> errors;  ///< row-level errors, one line each
};

Samples read_samples(const jf::Algebra& A, const std::string& path) {
  Table t = read_csv(path);
  int n = A.dim();
  std::vector<int> xc(n);
  for (int a = 0; a < n; ++a) xc[a] = require_col(t, "x" + std::to_string(a), path);
  int wc = require_col(t, "weight", path), fr = require_col(t, "f_re", path), fi = t.col("f_im"), ec = t.col("error");
  Samples s;
  s.q.algebra = A.descriptor();
  s.q.angular_rule = "user";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (ec >= 0 && !row[ec].empty()) continue;
    try {
      jf::Vec<double> x(n);
      for (int a = 0; a < n; ++a) x[a] = parse_num(row[xc[a]]);
      if (!A.in_xi(x, 1e-8)) throw std::domain_error("node is not on the minimal orbit");
      double w = parse_num(row[wc]);
      cplx f(parse_num(row[fr]), (fi >= 0 && !row[fi].empty()) ? parse_num(row[fi]) : 0.0);
      s.q.nodes.push_back(x);
      s.q.weights.push_back(w);
      s.q.radii.push_back(A.trace(x));
      s.f.push_back(f);
    } catch (const std::exception& e) {
      s.errors.push_back(std::to_string(r) + ": " + e.what());
    }
  }
  if (s.q.size() == 0) throw UsageError(path + ": no valid sample rows");
  return s;
}

/// Evaluation points: complex columns xa_re/xa_im when present, otherwise real xa.
struct Points {
  std::vector<jf::Vec<cplx>> z;
  std::vector<double> weight;  ///< carried over when points come from a sample file
  std::vector<std::string> error;
};

Points read_points(const jf::Algebra& A, const std::string& path) {
  Table t = read_csv(path);
  int n = A.dim();
  bool complex_cols = t.col("x0_re") >= 0;
  int wc = t.col("weight"), ec = t.col("error");
  Points p;
  for (const auto& row : t.rows) {
    jf::Vec<cplx> z(n);
    std::string err;
    try {
      if (ec >= 0 && !row[ec].empty()) throw std::domain_error(row[ec]);
      for (int a = 0; a < n; ++a) {
        std::string s = std::to_string(a);
        if (complex_cols) {
          int im = t.col("x" + s + "_im");
          z[a] = cplx(parse_num(row[require_col(t, "x" + s + "_re", path)]), im >= 0 ? parse_num(row[im]) : 0.0);
        } else {
          z[a] = parse_num(row[require_col(t, "x" + s, path)]);
        }
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      err = e.what();
    }
    p.z.push_back(z);
    p.weight.push_back(wc >= 0 && !row[wc].empty() ? parse_num(row[wc]) : std::nan(""));
    p.error.push_back(err);
  }
  return p;
}

Points points_from_samples(const Samples& s) {
  Points p;
  for (std::size_t i = 0; i < s.q.size(); ++i) {
    p.z.emplace_back(s.q.nodes[i].begin(), s.q.nodes[i].end());
    p.weight.push_back(s.q.weights[i]);
    p.error.emplace_back();
  }
  return p;
}

bool is_real(const jf::Vec<cplx>& z) {
  for (const auto& v : z)
    if (v.imag() != 0) return false;
  return true;
}

jf::Vec<double> real_vec(const jf::Vec<cplx>& z) {
  jf::Vec<double> x;
  for (const auto& v : z) x.push_back(v.real());
  return x;
}

std::string transform_csv(const jf::Algebra& A, const Points& p, const std::vector<cplx>& val,
                          const std::vector<std::string>& err, bool complex_coords,
                          const std::vector<std::string>& input_errors) {
  std::ostringstream os;
  for (const auto& e : input_errors) os << "# input row " << e << "\n";
  for (int a = 0; a < A.dim(); ++a) {
    if (complex_coords)
      os << "x" << a << "_re,x" << a << "_im,";
    else
      os << "x" << a << ",";
  }
  os << "weight,f_re,f_im,error\n";
  for (std::size_t i = 0; i < p.z.size(); ++i) {
    for (const auto& v : p.z[i]) {
      os << fmt(v.real()) << ",";
      if (complex_coords) os << fmt(v.imag()) << ",";
    }
    os << (std::isnan(p.weight[i]) ? "" : fmt(p.weight[i])) << ",";
    if (err[i].empty())
      os << fmt(val[i].real()) << "," << fmt(val[i].imag()) << ",\n";
    else
      os << ",," << quote(err[i]) << "\n";
  }
  return os.str();
}

// ---- commands ----

struct Common {
  std::string algebra = "minkowski:3";
  int max_degree = 4;
  int radial_order = 0;
  int angular_order = 0;
  double tol_scale = 1.0;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::string config;
};

int cmd_verify(const Common& c, CLI::App& app, bool no_runtime, const std::vector<std::string>& only) {
  jf::SuiteConfig cfg;
  if (!c.config.empty()) cfg = jf::load_config(read_file(c.config), cfg);
  // Command-line flags override the config file.
  auto take = [&](const char* flag) { return c.config.empty() || app.count(flag) > 0; };
  if (take("--algebra")) cfg.algebra = c.algebra;
  if (take("--max-degree")) cfg.max_degree = c.max_degree;
  if (take("--radial-order")) cfg.radial_order = c.radial_order;
  if (take("--angular-order")) cfg.angular_order = c.angular_order;
  if (take("--tol-scale")) cfg.tol_scale = c.tol_scale;
  if (take("--seed")) cfg.seed = c.seed;
  if (!only.empty()) cfg.only = only;
  try {
    jf::Algebra::parse(cfg.algebra);
    cfg = jf::load_config("{}", cfg);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  jf::SuiteReport rep = jf::run_suite(cfg);
  write_output(c.format == "csv" ? jf::report_csv(rep) : jf::report_json(rep, !no_runtime), c.out);
  for (const auto& r : rep.checks)
    std::cerr << jf::status_str(r.status) << "  " << r.name << "  measured=" << r.measured << " tol=" << r.tolerance
              << "\n";
  std::cerr << rep.count(jf::CheckStatus::Pass) << " passed, " << rep.count(jf::CheckStatus::Fail) << " failed, "
            << rep.count(jf::CheckStatus::Skip) << " skipped\n";
  return rep.passed() ? 0 : 1;
}

int cmd_transform(const Common& c, const std::string& which, const std::string& samples_path,
                  const std::string& points_path, double t) {
  jf::Algebra A = jf::Algebra::parse(c.algebra);
  std::vector<cplx> val;
  std::vector<std::string> err;
  Points p;
  std::vector<std::string> input_errors;
  bool complex_coords = false;

  if (which == "inverse-sb") {
    if (A.kind() != jf::AlgebraKind::Rank1) throw UsageError("inverse-sb is implemented for rank one only");
    Table tb = read_csv(samples_path);
    int zr = require_col(tb, "z_re", samples_path), zi = require_col(tb, "z_im", samples_path);
    int wc = require_col(tb, "weight", samples_path), fr = require_col(tb, "f_re", samples_path);
    int fi = tb.col("f_im");
    jf::FockQuadrature fq;
    std::map<std::pair<double, double>, cplx> values;
    for (std::size_t r = 0; r < tb.rows.size(); ++r) {
      const auto& row = tb.rows[r];
      try {
        cplx z(parse_num(row[zr]), parse_num(row[zi]));
        fq.nodes.push_back(z);
        fq.weights.push_back(parse_num(row[wc]));
        values[{z.real(), z.imag()}] =
            cplx(parse_num(row[fr]), fi >= 0 && !row[fi].empty() ? parse_num(row[fi]) : 0.0);
      } catch (const std::exception& e) {
        input_errors.push_back(std::to_string(r) + ": " + e.what());
      }
    }
    if (fq.size() == 0) throw UsageError(samples_path + ": no valid sample rows");
    if (points_path.empty()) throw UsageError("inverse-sb needs --points");
    p = read_points(A, points_path);
    auto F = [&](cplx z) { return values.at({z.real(), z.imag()}); };
    val.resize(p.z.size());
    err = p.error;
    for (std::size_t i = 0; i < p.z.size(); ++i) {
      if (!err[i].empty()) continue;
      if (!is_real(p.z[i]) || !A.in_xi(real_vec(p.z[i]), 1e-8)) {
        err[i] = "point is not on the minimal orbit";
        continue;
      }
      val[i] = jf::inverse_segal_bargmann_rank1(A, fq, F, p.z[i][0].real());
    }
    return write_output(transform_csv(A, p, val, err, false, input_errors), c.out), 0;
  }

  Samples s = read_samples(A, samples_path);
  input_errors = s.errors;
  p = points_path.empty() ? points_from_samples(s) : read_points(A, points_path);
  val.assign(p.z.size(), 0.0);
  err = p.error;
  if (which == "sb") {
    complex_coords = true;
    for (std::size_t i = 0; i < p.z.size(); ++i) {
      if (!err[i].empty()) continue;
      if (!A.in_min_orbit(p.z[i], 1e-8)) {
        err[i] = "point is not on the complex minimal orbit";
        continue;
      }
      val[i] = jf::segal_bargmann_numeric(A, s.q, s.f, p.z[i]);
    }
  } else if (which == "inversion" || which == "heat") {
    if (which == "heat" && !(t > 0)) throw UsageError("heat needs --t > 0");
    std::vector<double> fr(s.f.size()), fi(s.f.size());
    for (std::size_t i = 0; i < s.f.size(); ++i) {
      fr[i] = s.f[i].real();
      fi[i] = s.f[i].imag();
    }
    for (std::size_t i = 0; i < p.z.size(); ++i) {
      if (!err[i].empty()) continue;
      if (!is_real(p.z[i]) || !A.in_xi(real_vec(p.z[i]), 1e-8)) {
        err[i] = "point is not on the minimal orbit";
        continue;
      }
      jf::Vec<double> x = real_vec(p.z[i]);
      try {
        if (which == "inversion")
          val[i] = jf::unitary_inversion_numeric(A, s.q, s.f, x);
        else
          val[i] = cplx(jf::heat_apply(A, t, s.q, fr, x), jf::heat_apply(A, t, s.q, fi, x));
      } catch (const std::domain_error& e) {
        err[i] = e.what();
      }
    }
  } else {
    throw UsageError("unknown transform " + which);
  }
  write_output(transform_csv(A, p, val, err, complex_coords, input_errors), c.out);
  return 0;
}

int cmd_kernels(const Common& c, const std::string& which, double from, double to, int steps, double t) {
  if (steps < 1) throw UsageError("--steps must be positive");
  jf::Algebra A = jf::Algebra::parse(c.algebra);
  std::ostringstream os;
  auto grid = [&](int i) { return steps == 1 ? from : from + (to - from) * i / (steps - 1); };
  if (which == "B" || which == "F") {
    os << "t,re,im\n";
    for (int i = 0; i < steps; ++i) {
      double s = grid(i);
      cplx v = which == "B" ? jf::kernel_B(A.lambda_d(), s) : jf::kernel_F(A.r_lambda_d(), A.lambda_d(), s);
      os << fmt(s) << "," << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
    }
  } else if (which == "K") {
    // K(z,z) at seeded points of the complex orbit with |(z|conj z)|^{1/2} = s.
    std::mt19937_64 rng(c.seed);
    os << "s,K_re,K_im\n";
    for (int i = 0; i < steps; ++i) {
      double s = grid(i);
      if (!(s > 0)) throw UsageError("K grid must be positive");
      auto z = jf::random_xc_point(A, rng, s);
      cplx v = jf::repro_kernel(A, z, z);
      os << fmt(s) << "," << fmt(v.real()) << "," << fmt(v.imag()) << "\n";
    }
  } else if (which == "heat") {
    if (!(t > 0)) throw UsageError("heat needs --t > 0");
    // Gamma(t, s c1, c1) with c1 the first primitive idempotent of the Jordan frame.
    jf::Vec<double> y = jf::Algebra::cast<double>(A.jordan_frame()[0]);
    os << "t,s,gamma\n";
    for (int i = 0; i < steps; ++i) {
      double s = grid(i);
      if (!(s > 0)) throw UsageError("heat grid must be positive");
      jf::Vec<double> x = y;
      for (double& v : x) v *= s;
      os << fmt(t) << "," << fmt(s) << "," << fmt(jf::heat_kernel(A, t, x, y)) << "\n";
    }
  } else {
    throw UsageError("unknown kernel " + which);
  }
  write_output(os.str(), c.out);
  return 0;
}

int cmd_quadrature(const Common& c, double decay, bool fock) {
  jf::Algebra A = jf::Algebra::parse(c.algebra);
  std::ostringstream os;
  if (fock) {
    if (A.kind() != jf::AlgebraKind::Rank1) throw UsageError("the Fock rule is implemented for rank one only");
    auto fq = jf::fock_quadrature_rank1(A.lambda_d(), c.angular_order ? c.angular_order : 32);
    os << "z_re,z_im,weight\n";
    for (std::size_t i = 0; i < fq.size(); ++i)
      os << fmt(fq.nodes[i].real()) << "," << fmt(fq.nodes[i].imag()) << "," << fmt(fq.weights[i]) << "\n";
  } else {
    if (!(decay > 0)) throw UsageError("--decay must be positive");
    auto q = jf::xi_quadrature(A, c.radial_order ? c.radial_order : 20, c.angular_order ? c.angular_order : 8, decay);
    for (int a = 0; a < A.dim(); ++a) os << "x" << a << ",";
    os << "weight\n";
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (double v : q.nodes[i]) os << fmt(v) << ",";
      os << fmt(q.weights[i]) << "\n";
    }
  }
  write_output(os.str(), c.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segal-Bargmann transforms on minimal orbits: verification and evaluation"};
  app.set_version_flag("--version", jf::kToolVersion);
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--algebra", c.algebra, "rank1:<lambda>, minkowski:<n> or symmat:<k>");
    s->add_option("--max-degree", c.max_degree, "degree cap")->check(CLI::NonNegativeNumber);
    s->add_option("--radial-order", c.radial_order, "radial quadrature order (0 = default)")
        ->check(CLI::NonNegativeNumber);
    s->add_option("--angular-order", c.angular_order, "angular quadrature order (0 = default)")
        ->check(CLI::NonNegativeNumber);
    s->add_option("--tol-scale", c.tol_scale, "multiplies every default tolerance")->check(CLI::PositiveNumber);
    s->add_option("--seed", c.seed, "random seed");
    s->add_option("--out", c.out, "output file (default stdout)");
    s->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--config", c.config, "JSON config file")->check(CLI::ExistingFile);
  };

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify);
  bool no_runtime = false;
  std::vector<std::string> only;
  verify->add_flag("--no-runtime", no_runtime, "omit runtime fields for byte-identical reports");
  verify->add_option("--check", only, "run only the named checks");

  auto* transform = app.add_subcommand("transform", "apply a transform to sampled data");
  add_common(transform);
  std::string which_t, samples, points;
  double t = 0;
  transform->add_option("which", which_t, "sb, inverse-sb, inversion or heat")
      ->required()
      ->check(CLI::IsMember({"sb", "inverse-sb", "inversion", "heat"}));
  transform->add_option("--input", samples, "CSV with node coordinates, weight, f_re, f_im")->required();
  transform->add_option("--points", points, "CSV of evaluation points (default: the input nodes)");
  transform->add_option("--t", t, "heat time");

  auto* kernels = app.add_subcommand("kernels", "tabulate kernels on a grid");
  add_common(kernels);
  std::string which_k;
  double from = 0, to = 10, kt = 1;
  int steps = 11;
  kernels->add_option("which", which_k, "B, F, K or heat")->required()->check(CLI::IsMember({"B", "F", "K", "heat"}));
  kernels->add_option("--from", from, "grid start");
  kernels->add_option("--to", to, "grid end");
  kernels->add_option("--steps", steps, "grid size");
  kernels->add_option("--t", kt, "heat time");

  auto* quad = app.add_subcommand("quadrature", "export quadrature rules");
  add_common(quad);
  double decay = 2.0;
  bool fock = false;
  quad->add_option("--decay", decay, "exponential decay rate of the radial weight");
  quad->add_flag("--fock", fock, "export the rank-one Fock-space rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(c, *verify, no_runtime, only);
    if (*transform) return cmd_transform(c, which_t, samples, points, t);
    if (*kernels) return cmd_kernels(c, which_k, from, to, steps, kt);
    if (*quad) return cmd_quadrature(c, decay, fock);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
