/**
 * @file specialfn.hpp
 * @brief Renormalized Bessel functions, the kernels B and F, Gamma, and
 *        terminating hypergeometric / orthogonal polynomials.
 *
 * Renormalization: I~_a(z) = (z/2)^{-a} I_a(z), likewise J~ and K~.
 */
#pragma once

#include "jf/gq.hpp"

#include <complex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace jf {

using cplx = std::complex<double>;

struct SeriesControl {
  int max_terms = 300;
  double rel_tol = 1e-12;
  /// K~ switches to its e^{-x} asymptotic expansion above this argument.
  double asymptotic_switch = 30.0;
  /// J~ on the real axis switches to the Hankel expansion above this argument.
  double oscillatory_switch = 20.0;
};

enum class BesselKind { I, J, K };

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct Unsupported : std::logic_error {
  using std::logic_error::logic_error;
};

double gamma_fn(double x);
double lgamma_fn(double x);  // log|Gamma(x)|
double rgamma(double x);     // 1/Gamma(x), zero at the poles
double digamma_int(int n);   // psi(n) for integer n >= 1
double pochhammer_d(double a, int k);

/// Renormalized Bessel function at z. For K, z must be real and positive.
cplx bessel_tilde(BesselKind kind, double alpha, cplx z, const SeriesControl& ctrl = {});

/// Entire functions t -> I~_a(2 sqrt t) and t -> J~_a(2 sqrt t).
cplx bessel_tilde_sq(BesselKind kind, double alpha, cplx t, const SeriesControl& ctrl = {});

/// K~_a(x) for real x > 0.
double k_tilde(double alpha, double x, const SeriesControl& ctrl = {});

/// B(t) = Gamma(lambda) I~_{lambda-1}(2 sqrt t); entire, B(0) = 1.
cplx kernel_B(double lambda, cplx t, const SeriesControl& ctrl = {});
/// log B(t) for real t >= 0 (no overflow for large t).
double log_kernel_B(double lambda, double t, const SeriesControl& ctrl = {});
/// F(t) = 2^{-r lambda} B(-t).
cplx kernel_F(double r_lambda, double lambda, cplx t, const SeriesControl& ctrl = {});

/// Closed form of int_0^inf K~_a(a x) x^b dx.
double k_bessel_moment(double alpha, double beta, double a);

/// 2^{pow2} * prod Gamma(args), kept symbolic for exact comparison.
struct GammaProduct {
  Q pow2;
  std::multiset<Q> gamma_args;
  bool operator==(const GammaProduct& o) const {
    return pow2 == o.pow2 && gamma_args == o.gamma_args;
  }
  double value() const;
  std::string str() const;
};

/// Symbolic moment formula at a = 1.
GammaProduct k_bessel_moment_symbolic(const Q& alpha, const Q& beta);
/// c_{r,lambda} = 2^{2 r lambda - 2} Gamma(r lambda) Gamma((r-1) lambda + 1).
GammaProduct fock_normalization_symbolic(int r, const Q& lambda);
double fock_normalization(int r, double lambda);

// ---- terminating hypergeometric and classical orthogonal polynomials ----

/// 2F1(-m, b; c; z), a terminating series.
template <class T>
T hyp2f1_terminating(long m, const T& b, const T& c, const T& z) {
  if (m < 0) throw Unsupported("hyp2f1_terminating: first parameter must be -m with m >= 0");
  T term(1), sum(1);
  for (long j = 0; j < m; ++j) {
    term = term * T(j - m) * (b + T(j)) / ((c + T(j)) * T(j + 1)) * z;
    sum = sum + term;
  }
  return sum;
}

/// Generalized Laguerre L_k^a(x) by the three-term recurrence.
template <class T>
T laguerre(long k, const T& a, const T& x) {
  if (k < 0) return T(0);
  T p0(1);
  if (k == 0) return p0;
  T p1 = T(1) + a - x;
  for (long n = 1; n < k; ++n) {
    T p2 = ((T(2 * n + 1) + a - x) * p1 - (T(n) + a) * p0) / T(n + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Gegenbauer C_n^a(x) by the three-term recurrence.
template <class T>
T gegenbauer(long n, const T& a, const T& x) {
  if (n < 0) return T(0);
  T c0(1);
  if (n == 0) return c0;
  T c1 = T(2) * a * x;
  for (long k = 2; k <= n; ++k) {
    T c2 = (T(2) * x * (T(k - 1) + a) * c1 - (T(k - 2) + T(2) * a) * c0) / T(k);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

/// Jacobi P_n^{(a,b)}(x) by the three-term recurrence.
template <class T>
T jacobi(long n, const T& a, const T& b, const T& x) {
  if (n < 0) return T(0);
  T p0(1);
  if (n == 0) return p0;
  T p1 = (a + T(1)) + (a + b + T(2)) * (x - T(1)) / T(2);
  for (long k = 2; k <= n; ++k) {
    T kk(k);
    T s = T(2) * kk + a + b;
    T c1 = T(2) * kk * (kk + a + b) * (s - T(2));
    T c2 = (s - T(1)) * (a * a - b * b);
    T c3 = (s - T(2)) * (s - T(1)) * s;
    T c4 = T(2) * (kk + a - T(1)) * (kk + b - T(1)) * s;
    T p2 = ((c2 + c3 * x) * p1 - c4 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

enum class PolyKind { Gauss2F1, Laguerre, Gegenbauer, Jacobi };

/// Runtime dispatch. params: 2F1 {m, b, c}; Laguerre {k, a}; Gegenbauer {n, a};
/// Jacobi {n, a, b}.
cplx classical_poly(PolyKind kind, const std::vector<double>& params, cplx z);

/// Constant K with 2F1(-n, b; 1/2; z^2) = K * C_{2n}^{b-n}(z).
Q gegenbauer_chain_constant(long n, const Q& b);

}  // namespace jf
