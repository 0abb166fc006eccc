/**
 * @file heat.cpp
 * @brief Heat kernel evaluation, heat semigroup quadrature and the restriction-map operators.
 */
#include "jf/heat.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jf {

namespace {

double tr_of(const Algebra& A, const Vec<double>& x) { return A.trace(x); }

double ratio_B(double lambda, double s, int shift) {
  // B_{lambda+shift}(s) / B_lambda(s) for s >= 0.
  return std::exp(log_kernel_B(lambda + shift, s) - log_kernel_B(lambda, s));
}

}  // namespace

double log_heat_kernel(const Algebra& A, double t, const Vec<double>& x, const Vec<double>& y,
                       const SeriesControl& ctrl) {
  if (!(t > 0)) throw std::domain_error("heat_kernel: t must be positive");
  double xy = std::max(A.trace_form(x, y), 0.0);
  return -A.r_lambda_d() * std::log(2.0 * t) - (tr_of(A, x) + tr_of(A, y)) / t +
         log_kernel_B(A.lambda_d(), xy / (t * t), ctrl);
}

double heat_kernel(const Algebra& A, double t, const Vec<double>& x, const Vec<double>& y,
                   const SeriesControl& ctrl) {
  return std::exp(log_heat_kernel(A, t, x, y, ctrl));
}

Quadrature heat_quadrature(const Algebra& A, double t, int radial_order, int angular_degree) {
  if (!(t > 0)) throw std::domain_error("heat_quadrature: t must be positive");
  return xi_quadrature(A, radial_order, angular_degree, 1.0 / t);
}

double heat_apply(const Algebra& A, double t, const Quadrature& q, const std::vector<double>& fvals,
                  const Vec<double>& x) {
  if (q.algebra != A.descriptor()) throw std::invalid_argument("heat_apply: quadrature/algebra mismatch");
  if (fvals.size() != q.size()) throw std::invalid_argument("heat_apply: sample count mismatch");
  double rmax = 0;
  for (double r : q.radii) rmax = std::max(rmax, r);
  double sum = 0, mass = 0, tail = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    double v = q.weights[i] * heat_kernel(A, t, x, q.nodes[i]) * fvals[i];
    sum += v;
    mass += std::abs(v);
    if (q.radii[i] == rmax) tail += std::abs(v);
  }
  if (tail > 1e-8 * mass) throw std::domain_error("heat_apply: integrand does not decay on the quadrature rule");
  return sum;
}

std::vector<double> heat_apply(const Algebra& A, double t, const Quadrature& q,
                               const std::vector<std::vector<double>>& fvals, const Vec<double>& x) {
  if (q.algebra != A.descriptor()) throw std::invalid_argument("heat_apply: quadrature/algebra mismatch");
  for (const auto& f : fvals)
    if (f.size() != q.size()) throw std::invalid_argument("heat_apply: sample count mismatch");
  double rmax = 0;
  for (double r : q.radii) rmax = std::max(rmax, r);
  std::vector<double> sum(fvals.size(), 0.0);
  double mass = 0, tail = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    double k = q.weights[i] * heat_kernel(A, t, x, q.nodes[i]);
    double fmax = 0;
    for (std::size_t b = 0; b < fvals.size(); ++b) {
      sum[b] += k * fvals[b][i];
      fmax = std::max(fmax, std::abs(fvals[b][i]));
    }
    mass += std::abs(k) * fmax;
    if (q.radii[i] == rmax) tail += std::abs(k) * fmax;
  }
  if (tail > 1e-8 * mass) throw std::domain_error("heat_apply: integrand does not decay on the quadrature rule");
  return sum;
}

double heat_exponential_oracle(const Algebra& A, double a, double t, const Vec<double>& x) {
  double d = 1.0 + a * t;
  if (!(d > 0)) throw std::domain_error("heat_exponential_oracle: 1 + a t must be positive");
  return std::pow(d, -A.r_lambda_d()) * std::exp(-a * tr_of(A, x) / d);
}

double heat_kernel_dual(const Algebra& A, double t, const Vec<double>& x, const Vec<double>& y,
                        const Quadrature& q) {
  if (!(t > 0)) throw std::domain_error("heat_kernel_dual: t must be positive");
  if (q.algebra != A.descriptor()) throw std::invalid_argument("heat_kernel_dual: quadrature/algebra mismatch");
  double lambda = A.lambda_d();
  double sum = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto& xi = q.nodes[i];
    double bx = kernel_B(lambda, cplx(-A.trace_form(x, xi), 0.0)).real();
    double by = kernel_B(lambda, cplx(-A.trace_form(y, xi), 0.0)).real();
    sum += q.weights[i] * std::exp(-t * q.radii[i]) * bx * by;
  }
  return std::pow(2.0, -2.0 * A.r_lambda_d()) * sum;
}

HeatPdeReport heat_pde_residual(const Algebra& A, double t, const Vec<double>& x, const Vec<double>& y) {
  if (!(t > 0)) throw std::domain_error("heat_pde_residual: t must be positive");
  const int n = A.dim();
  const double lambda = A.lambda_d();
  const double G = heat_kernel(A, t, x, y);

  // Gamma = C e^{-a/t} B(b/t^2) with a = tr x and b = (x|y). Derivatives in units of Gamma.
  double s = std::max(A.trace_form(x, y), 0.0) / (t * t);
  double r1 = ratio_B(lambda, s, 1) / lambda;
  double r2 = ratio_B(lambda, s, 2) / (lambda * (lambda + 1.0));
  double Fa = -1.0 / t, Fb = r1 / (t * t);
  double Faa = 1.0 / (t * t), Fab = -r1 / (t * t * t), Fbb = r2 / (t * t * t * t);

  const auto& g = A.gram();
  Vec<Q> e = A.unit();
  std::vector<double> al(n), be(n);
  for (int a = 0; a < n; ++a) {
    al[a] = g[a].get_d() * e[a].get_d();
    be[a] = g[a].get_d() * y[a];
  }
  // Second-order Taylor polynomial of Gamma/G at x in exact rational arithmetic.
  std::vector<MPoly> d(n);
  for (int a = 0; a < n; ++a) d[a] = MPoly::variable(n, a) - MPoly::constant(n, GQ(Q(x[a])));
  MPoly P = MPoly::constant(n, GQ(1));
  for (int a = 0; a < n; ++a) P += d[a] * GQ(Q(Fa * al[a] + Fb * be[a]));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double h = Faa * al[a] * al[b] + Fab * (al[a] * be[b] + be[a] * al[b]) + Fbb * be[a] * be[b];
      P += d[a] * d[b] * GQ(Q(0.5 * h));
    }
  BesselOp B(A);
  Vec<GQ> xq(n);
  for (int a = 0; a < n; ++a) xq[a] = GQ(Q(x[a]));
  double bessel = B.trace_part(P).eval(xq).re.get_d() * G;

  auto D = [&](double h) {
    return (heat_kernel(A, t + h, x, y) - heat_kernel(A, t - h, x, y)) / (2.0 * h);
  };
  double h = 1e-3 * t;
  double dt = (4.0 * D(h / 2.0) - D(h)) / 3.0;

  HeatPdeReport rep;
  rep.dt = dt;
  rep.bessel = bessel;
  rep.residual = std::abs(dt - bessel) / std::max(std::abs(dt), std::abs(bessel));
  return rep;
}

cplx r_star_apply(const Algebra& A, const Quadrature& q, const std::vector<double>& fvals, const Vec<cplx>& z) {
  if (q.algebra != A.descriptor()) throw std::invalid_argument("r_star_apply: quadrature/algebra mismatch");
  if (fvals.size() != q.size()) throw std::invalid_argument("r_star_apply: sample count mismatch");
  A.check(z);
  double lambda = A.lambda_d();
  cplx sum = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    Vec<cplx> y(q.nodes[i].begin(), q.nodes[i].end());
    sum += q.weights[i] * std::exp(-q.radii[i] / 2.0) * fvals[i] * kernel_B(lambda, A.trace_form(y, z) / 4.0);
  }
  return sum;
}

double abs_r_apply(const Algebra& A, const Quadrature& q, const std::vector<double>& fvals, const Vec<double>& x) {
  return std::pow(2.0, A.r_lambda_d()) * heat_apply(A, 1.0, q, fvals, x);
}

double rr_star_apply(const Algebra& A, const Quadrature& q, const std::vector<double>& fvals,
                     const Vec<double>& x) {
  return std::pow(2.0, 2.0 * A.r_lambda_d()) * heat_apply(A, 2.0, q, fvals, x);
}

std::vector<double> rr_star_apply(const Algebra& A, const Quadrature& q,
                                  const std::vector<std::vector<double>>& fvals, const Vec<double>& x) {
  auto v = heat_apply(A, 2.0, q, fvals, x);
  for (double& e : v) e *= std::pow(2.0, 2.0 * A.r_lambda_d());
  return v;
}

}  // namespace jf
