#include "jf/orbit.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <sstream>

namespace jf {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXd tridiag_eigenvalues(const Eigen::VectorXd& d, const Eigen::VectorXd& e) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("tridiagonal eigensolver failed");
  return es.eigenvalues();
}

// Ratio L_n^a(u) / (d/du) L_n^a(u) from the three-term recurrence with rescaling.
double laguerre_newton_ratio(int n, double a, double u) {
  double p0 = 1.0, p1 = 1.0 + a - u;
  for (int k = 1; k < n; ++k) {
    double p2 = ((2.0 * k + 1.0 + a - u) * p1 - (k + a) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
    if (std::fabs(p1) > 1e150) {
      p0 *= 1e-150;
      p1 *= 1e-150;
    }
  }
  double dp = (n * p1 - (n + a) * p0) / u;
  return p1 / dp;
}

}  // namespace

LaguerreRule gauss_laguerre(int n, double a) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: order must be >= 1");
  if (!(a > -1.0)) throw std::invalid_argument("gauss_laguerre: exponent must exceed -1");
  Eigen::VectorXd d(n), e(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) d[k] = 2.0 * k + a + 1.0;
  for (int k = 0; k + 1 < n; ++k) e[k] = std::sqrt((k + 1.0) * (k + 1.0 + a));
  Eigen::VectorXd ev = tridiag_eigenvalues(d, e);
  LaguerreRule r;
  double log_mu0 = lgamma_fn(a + 1.0);
  for (int i = 0; i < n; ++i) {
    double u = ev[i];
    for (int it = 0; it < 3; ++it) {
      double step = laguerre_newton_ratio(n, a, u);
      if (!std::isfinite(step)) break;
      u -= step;
    }
    // Christoffel function with orthonormal recurrence, q_0 = 1.
    double q0 = 0.0, q1 = 1.0, sum = 1.0, log_scale = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
      double q2 = ((u - d[k]) * q1 - (k > 0 ? e[k - 1] * q0 : 0.0)) / e[k];
      q0 = q1;
      q1 = q2;
      sum += q1 * q1;
      if (std::fabs(q1) > 1e100) {
        q0 *= 1e-100;
        q1 *= 1e-100;
        sum *= 1e-200;
        log_scale += 200.0 * std::log(10.0);
      }
    }
    r.u.push_back(u);
    r.log_w.push_back(log_mu0 - std::log(sum) - log_scale);
  }
  return r;
}

Rule1D gauss_gegenbauer(int n, double a) {
  if (n < 1) throw std::invalid_argument("gauss_gegenbauer: order must be >= 1");
  if (!(a > -1.0)) throw std::invalid_argument("gauss_gegenbauer: exponent must exceed -1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = std::sqrt(k * (k + 2.0 * a) / ((2.0 * k + 2.0 * a + 1.0) * (2.0 * k + 2.0 * a - 1.0)));
    J(k, k - 1) = J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule1D r;
  double total = 0;
  for (int i = 0; i < n; ++i) {
    r.x.push_back(es.eigenvalues()[i]);
    double v = es.eigenvectors()(0, i);
    r.w.push_back(v * v);
    total += v * v;
  }
  for (double& w : r.w) w /= total;
  return r;
}

Rule1D gauss_legendre(int n, double lo, double hi) {
  Rule1D g = gauss_gegenbauer(n, 0.0);
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    g.x[i] = lo + (hi - lo) * (g.x[i] + 1.0) / 2.0;
    g.w[i] *= (hi - lo);
  }
  return g;
}

SphereRule sphere_rule(int m, int degree) {
  if (m < 0) throw std::invalid_argument("sphere_rule: negative dimension");
  if (degree < 0) throw std::invalid_argument("sphere_rule: negative degree");
  SphereRule s;
  if (m == 0) {
    s.points = {{1.0}, {-1.0}};
    s.weights = {0.5, 0.5};
    return s;
  }
  if (m == 1) {
    int N = degree + 1;
    for (int j = 0; j < N; ++j) {
      double th = 2.0 * kPi * (j + 0.5) / N;
      s.points.push_back({std::cos(th), std::sin(th)});
      s.weights.push_back(1.0 / N);
    }
    return s;
  }
  Rule1D g = gauss_gegenbauer(degree / 2 + 1, (m - 2) / 2.0);
  SphereRule sub = sphere_rule(m - 1, degree);
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    double u = g.x[i], c = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (std::size_t j = 0; j < sub.points.size(); ++j) {
      std::vector<double> p{u};
      for (double y : sub.points[j]) p.push_back(c * y);
      s.points.push_back(std::move(p));
      s.weights.push_back(g.w[i] * sub.weights[j]);
    }
  }
  return s;
}

Vec<double> xi_point(const Algebra& A, double t, const std::vector<double>& ang) {
  if (!(t > 0)) throw std::invalid_argument("xi_point: t must be positive");
  switch (A.kind()) {
    case AlgebraKind::Rank1:
      return {t};
    case AlgebraKind::Minkowski: {
      int n = A.dim();
      if (static_cast<int>(ang.size()) != n - 1) throw std::invalid_argument("xi_point: expected a point of S^{n-2}");
      double nrm = 0;
      for (double w : ang) nrm += w * w;
      nrm = std::sqrt(nrm);
      if (!(nrm > 0)) throw std::invalid_argument("xi_point: zero angular vector");
      Vec<double> x(n);
      x[0] = t / 2.0;
      for (int j = 1; j < n; ++j) x[j] = t / 2.0 * ang[j - 1] / nrm;
      return x;
    }
    case AlgebraKind::SymMat: {
      if (static_cast<int>(ang.size()) != A.matrix_size()) throw std::invalid_argument("xi_point: expected a point of S^{k-1}");
      double nrm = 0;
      for (double w : ang) nrm += w * w;
      if (!(nrm > 0)) throw std::invalid_argument("xi_point: zero angular vector");
      Vec<double> x = folding_map(A, ang);
      for (double& c : x) c *= t / nrm;
      return x;
    }
  }
  throw std::logic_error("xi_point: unknown algebra");
}

Vec<double> folding_map(const Algebra& A, const std::vector<double>& v) {
  if (A.kind() != AlgebraKind::SymMat) throw Unsupported("folding_map requires Sym(k,R)");
  int k = A.matrix_size();
  if (static_cast<int>(v.size()) != k) throw std::invalid_argument("folding_map: wrong vector length");
  bool nz = false;
  for (double c : v) nz = nz || c != 0.0;
  if (!nz) throw std::invalid_argument("folding_map: v must be non-zero");
  Vec<double> x(A.dim(), 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) x[A.sym_index(i, j)] = v[i] * v[j];
  return x;
}

Vec<cplx> folding_map(const Algebra& A, const std::vector<cplx>& v) {
  if (A.kind() != AlgebraKind::SymMat) throw Unsupported("folding_map requires Sym(k,R)");
  int k = A.matrix_size();
  if (static_cast<int>(v.size()) != k) throw std::invalid_argument("folding_map: wrong vector length");
  bool nz = false;
  for (const cplx& c : v) nz = nz || c != 0.0;
  if (!nz) throw std::invalid_argument("folding_map: v must be non-zero");
  Vec<cplx> x(A.dim(), 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) x[A.sym_index(i, j)] = v[i] * v[j];
  return x;
}

Vec<cplx> random_xc_point(const Algebra& A, std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> mod(0.5, 1.0), arg(0.0, 2.0 * std::numbers::pi);
  auto rc = [&] { return std::polar(mod(rng), arg(rng)); };
  Vec<cplx> z;
  switch (A.kind()) {
    case AlgebraKind::Rank1:
      z = {rc()};
      break;
    case AlgebraKind::Minkowski: {
      int n = A.dim();
      for (;;) {
        std::vector<cplx> u(n - 1);
        double nrm = 0;
        cplx q = 0;
        for (auto& c : u) {
          c = rc();
          nrm += std::norm(c);
          q += c * c;
        }
        // Reject near-isotropic draws so that u / sqrt(u.u) stays bounded.
        if (std::abs(q) < 0.25 * nrm) continue;
        cplx s = std::sqrt(q);
        cplx a = rc();
        z.assign(n, 0.0);
        z[0] = a / 2.0;
        for (int j = 1; j < n; ++j) z[j] = a / 2.0 * u[j - 1] / s;
        break;
      }
      break;
    }
    case AlgebraKind::SymMat: {
      std::vector<cplx> v(A.matrix_size());
      for (auto& c : v) c = rc();
      z = folding_map(A, v);
      break;
    }
  }
  Vec<cplx> zb(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) zb[j] = std::conj(z[j]);
  double nrm = std::sqrt(std::abs(A.trace_form(z, zb)));
  for (auto& c : z) c *= radius / nrm;
  return z;
}

std::string Quadrature::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  if (!nodes.empty()) {
    for (std::size_t j = 0; j < nodes[0].size(); ++j) os << "x" << j << ",";
  }
  os << "weight\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (double c : nodes[i]) os << c << ",";
    os << weights[i] << "\n";
  }
  return os.str();
}

namespace {

Quadrature build_xi(const Algebra& A, int radial_order, int angular_degree, double decay, bool radial_only) {
  if (radial_order < 1) throw std::invalid_argument("xi_quadrature: radial_order must be >= 1");
  if (angular_degree < 0) throw std::invalid_argument("xi_quadrature: unsupported angular degree");
  if (!(decay > 0)) throw std::invalid_argument("xi_quadrature: decay must be positive");
  double rl = A.r_lambda_d();
  LaguerreRule lr = gauss_laguerre(radial_order, rl - 1.0);
  double log_pref = rl * std::log(2.0) - lgamma_fn(rl) - rl * std::log(decay);

  std::vector<std::vector<double>> dirs;
  std::vector<double> dw;
  std::string rule;
  if (A.kind() == AlgebraKind::Rank1 || radial_only) {
    // A direction realizing c1.
    switch (A.kind()) {
      case AlgebraKind::Rank1:
        dirs = {{}};
        break;
      case AlgebraKind::Minkowski: {
        std::vector<double> w(A.dim() - 1, 0.0);
        w.back() = 1.0;
        dirs = {w};
        break;
      }
      case AlgebraKind::SymMat: {
        std::vector<double> v(A.matrix_size(), 0.0);
        v[0] = 1.0;
        dirs = {v};
        break;
      }
    }
    dw = {1.0};
    rule = "single";
  } else if (A.kind() == AlgebraKind::Minkowski) {
    SphereRule s = sphere_rule(A.dim() - 2, angular_degree);
    dirs = s.points;
    dw = s.weights;
    rule = "product-gauss S^" + std::to_string(A.dim() - 2);
  } else {
    // x is quadratic in v, so degree d in x needs degree 2d on the sphere.
    SphereRule s = sphere_rule(A.matrix_size() - 1, 2 * angular_degree);
    dirs = s.points;
    dw = s.weights;
    rule = "folded product-gauss S^" + std::to_string(A.matrix_size() - 1);
  }

  Quadrature q;
  q.radial_order = radial_order;
  q.angular_degree = angular_degree;
  q.decay = decay;
  q.angular_rule = rule;
  q.algebra = A.descriptor();
  for (std::size_t i = 0; i < lr.u.size(); ++i) {
    double t = lr.u[i] / decay;
    double wr = std::exp(log_pref + lr.log_w[i] + lr.u[i]);
    if (!(wr > 0) || !std::isfinite(wr)) continue;  // underflowed weight carries no mass
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      q.nodes.push_back(xi_point(A, t, dirs[j]));
      q.weights.push_back(wr * dw[j]);
      q.radii.push_back(t);
    }
  }
  return q;
}

}  // namespace

Quadrature xi_quadrature(const Algebra& A, int radial_order, int angular_degree, double decay) {
  return build_xi(A, radial_order, angular_degree, decay, false);
}

Quadrature xi_radial_quadrature(const Algebra& A, int radial_order, double decay) {
  return build_xi(A, radial_order, 0, decay, true);
}

FockQuadrature fock_quadrature_rank1(double lambda, int angular_nodes, double s_max, int panel_order) {
  if (!(lambda > 0)) throw std::invalid_argument("fock_quadrature_rank1: lambda must be positive");
  if (angular_nodes < 1 || panel_order < 1 || !(s_max > 1)) throw std::invalid_argument("fock_quadrature_rank1: bad rule sizes");
  std::vector<std::pair<double, double>> panels;
  const int levels = 40;
  panels.emplace_back(0.0, std::ldexp(1.0, -levels));
  for (int j = levels; j > 0; --j) panels.emplace_back(std::ldexp(1.0, -j), std::ldexp(1.0, -j + 1));
  for (double a = 1.0; a < s_max; a += 1.0) panels.emplace_back(a, std::min(a + 1.0, s_max));
  double c = fock_normalization(1, lambda);
  FockQuadrature f;
  for (const auto& [lo, hi] : panels) {
    Rule1D g = gauss_legendre(panel_order, lo, hi);
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      double s = g.x[i];
      double w = g.w[i] * k_tilde(lambda - 1.0, s) * std::pow(s, 2.0 * lambda - 1.0) / (angular_nodes * c);
      if (!(w > 0)) continue;
      for (int j = 0; j < angular_nodes; ++j) {
        double th = 2.0 * kPi * j / angular_nodes;
        f.nodes.push_back(std::polar(s, th));
        f.weights.push_back(w);
      }
    }
  }
  return f;
}

}  // namespace jf
