/**
 * @file orbit.hpp
 * @brief Points of the minimal orbit, quadrature rules for d mu_lambda on Xi and
 *        for the rank-one Fock measure, and the folding map for Sym(k,R).
 */
#pragma once

#include "jf/jordan.hpp"

#include <random>
#include <string>

namespace jf {

/// Nodes and weights of a one-dimensional rule.
struct Rule1D {
  std::vector<double> x, w;
};

/// Generalized Gauss-Laguerre rule for u^a e^{-u} on (0, inf). Weights are
/// returned as logarithms so that tiny weights at large nodes stay exact.
struct LaguerreRule {
  std::vector<double> u, log_w;
};
LaguerreRule gauss_laguerre(int n, double a);

/// Gauss-Jacobi rule on [-1, 1] for (1-u^2)^a, normalized to unit mass.
Rule1D gauss_gegenbauer(int n, double a);
Rule1D gauss_legendre(int n, double lo, double hi);

/// Rule for the normalized rotation-invariant measure on S^m in R^{m+1}
/// exact for polynomials up to the given degree.
struct SphereRule {
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
};
SphereRule sphere_rule(int m, int degree);

/// Real minimal orbit point t * sigma, |t sigma| = t.
/// Minkowski: sigma = (1, omega)/2 with omega in S^{n-2}. Sym(k): sigma = v v^t, |v| = 1.
/// Rank one: sigma = 1 and angular is ignored.
Vec<double> xi_point(const Algebra& A, double t, const std::vector<double>& angular = {});

/// Folding map v -> v v^t for Sym(k,R), also for complex v.
Vec<double> folding_map(const Algebra& A, const std::vector<double>& v);
Vec<cplx> folding_map(const Algebra& A, const std::vector<cplx>& v);

/// Random point of the complex minimal orbit with |(z|conj z)|^{1/2} = radius. The generating
/// vectors have entries of modulus in [0.5, 1] so that monomials stay away from zero.
Vec<cplx> random_xc_point(const Algebra& A, std::mt19937_64& rng, double radius = 1.0);

struct Quadrature {
  std::vector<Vec<double>> nodes;
  std::vector<double> weights;
  /// Radial parameter t = tr(x) of each node.
  std::vector<double> radii;
  int radial_order = 0;
  int angular_degree = 0;
  double decay = 2.0;
  std::string angular_rule;
  std::string algebra;

  std::size_t size() const { return weights.size(); }
  /// Sum of f(node) * weight in index order.
  template <class F>
  auto integrate(F&& f) const -> decltype(f(nodes[0]) * 1.0) {
    using R = decltype(f(nodes[0]) * 1.0);
    R s = R(0);
    for (std::size_t i = 0; i < nodes.size(); ++i) s += f(nodes[i]) * weights[i];
    return s;
  }
  /// CSV export: coordinates followed by the weight.
  std::string to_csv() const;
};

/// Rule for d mu_lambda on Xi with total mass normalization
/// int f d mu = 2^{r lambda}/Gamma(r lambda) int_S int_0^inf f(t s) t^{r lambda - 1} dt ds.
/// The radial rule is exact for t^{r lambda - 1} e^{-decay t} times polynomials of
/// degree < 2 radial_order.
Quadrature xi_quadrature(const Algebra& A, int radial_order, int angular_degree, double decay = 2.0);

/// Radial-only rule for integrands that depend on tr(x) alone.
Quadrature xi_radial_quadrature(const Algebra& A, int radial_order, double decay = 2.0);

/// Rank-one Fock rule for the measure omega d nu on C with <1,1> = 1.
struct FockQuadrature {
  std::vector<cplx> nodes;
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
};
FockQuadrature fock_quadrature_rank1(double lambda, int angular_nodes, double s_max = 80.0, int panel_order = 16);

}  // namespace jf
