/**
 * @file heat.hpp
 * @brief Heat kernel Gamma(t,x,y) of the operator B_e on Xi, the heat semigroup,
 *        and the factorization of R* through the Segal-Bargmann transform.
 */
#pragma once

#include "jf/orbit.hpp"
#include "jf/poly.hpp"
#include "jf/specialfn.hpp"

namespace jf {

/// log Gamma(t,x,y) = -r lambda log(2t) - (tr x + tr y)/t + log B((x|y)/t^2).
double log_heat_kernel(const Algebra& A, double t, const Vec<double>& x, const Vec<double>& y,
                       const SeriesControl& ctrl = {});
/// Gamma(t,x,y) > 0 for t > 0. Throws std::domain_error for t <= 0.
double heat_kernel(const Algebra& A, double t, const Vec<double>& x, const Vec<double>& y,
                   const SeriesControl& ctrl = {});

/// Quadrature on Xi adapted to integrands decaying like e^{-tr(y)/t}.
Quadrature heat_quadrature(const Algebra& A, double t, int radial_order, int angular_degree);

/// (e^{t B_e} f)(x) = int Gamma(t,x,y) f(y) d mu(y) for f sampled at the nodes of q.
/// Throws std::domain_error when the outermost radial shell carries more than
/// 1e-8 of the absolute mass, i.e. the integrand does not decay on the rule.
double heat_apply(const Algebra& A, double t, const Quadrature& q, const std::vector<double>& fvals,
                  const Vec<double>& x);

/// Same for several functions sharing the kernel evaluations; the tail check uses the
/// largest |f| at each node.
std::vector<double> heat_apply(const Algebra& A, double t, const Quadrature& q,
                               const std::vector<std::vector<double>>& fvals, const Vec<double>& x);

/// Closed form e^{t B_e} e^{-a tr} = (1 + a t)^{-r lambda} e^{-a tr / (1 + a t)}.
double heat_exponential_oracle(const Algebra& A, double a, double t, const Vec<double>& x);

/// 2^{-2 r lambda} int e^{-t tr xi} B(-(x|xi)) B(-(y|xi)) d mu(xi).
double heat_kernel_dual(const Algebra& A, double t, const Vec<double>& x, const Vec<double>& y,
                        const Quadrature& q);

struct HeatPdeReport {
  double dt = 0;        ///< d/dt Gamma by Richardson-extrapolated central differences
  double bessel = 0;    ///< B_e Gamma(t, ., y) at x
  double residual = 0;  ///< |dt - bessel| / max(|dt|, |bessel|)
};

/// Heat equation check at (t,x,y). B_e is applied exactly to the second-order Taylor
/// polynomial of Gamma(t, ., y) at x, which determines B_e Gamma at x.
HeatPdeReport heat_pde_residual(const Algebra& A, double t, const Vec<double>& x, const Vec<double>& y);

/// R* f(z) = int B((y|z)/4) e^{-tr(y)/2} f(y) d mu(y).
cplx r_star_apply(const Algebra& A, const Quadrature& q, const std::vector<double>& fvals, const Vec<cplx>& z);
/// |R| f(x) = 2^{r lambda} int Gamma(1,x,y) f(y) d mu(y).
double abs_r_apply(const Algebra& A, const Quadrature& q, const std::vector<double>& fvals, const Vec<double>& x);
/// R R* f(x) = 2^{2 r lambda} int Gamma(2,x,y) f(y) d mu(y).
double rr_star_apply(const Algebra& A, const Quadrature& q, const std::vector<double>& fvals,
                     const Vec<double>& x);
std::vector<double> rr_star_apply(const Algebra& A, const Quadrature& q,
                                  const std::vector<std::vector<double>>& fvals, const Vec<double>& x);

}  // namespace jf
