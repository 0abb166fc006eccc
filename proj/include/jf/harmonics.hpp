/**
 * @file harmonics.hpp
 * @brief Spherical harmonics on the complex minimal orbit as the kernel of B_e,
 *        the explicit harmonic decomposition, spherical and highest weight
 *        vectors, and dimension formulas.
 */
#pragma once

#include "jf/poly.hpp"

namespace jf {

struct HarmonicBasis {
  int m = 0;
  /// Raw-coordinate polynomials, homogeneous of degree m, with B_e p = 0 on X.
  std::vector<MPoly> basis;
};

/// Coordinates of a normal form polynomial against orbit_monomials(A, m).
Vec<GQ> orbit_coordinates(const Algebra& A, const MPoly& p, int m);

/// Matrix of B_e: P^m(X) -> P^{m-1}(X) in the orbit monomial bases.
Mat<GQ> trace_bessel_matrix(const BesselOp& B, int m);

HarmonicBasis harmonic_basis(const BesselOp& B, int m);

/// Components [h_m, h_{m-1}, ..., h_0] with p = sum_k tr^k h_{m-k} on X.
std::vector<MPoly> harmonic_decompose(const BesselOp& B, const MPoly& p);

/// tr(x)^m 2F1(-m, m + r lambda - 1; lambda; (x|c1)/tr(x)), requires rank >= 2.
MPoly spherical_vector(const Algebra& A, int m);

/// (x | c1 + i x0 - c2)^m, requires rank >= 2.
MPoly highest_weight_vector(const Algebra& A, int m);

/// a = c1 + i x0 - c2.
Vec<GQ> highest_weight_direction(const Algebra& A);

/// X0 = [L(c1), L(x0)] as a matrix in raw coordinates.
Mat<GQ> x0_derivation(const Algebra& A);

/// d_m = (n/r)_m (r lambda)_m / (m! (lambda)_m) = dim P^m(X); zero for m < 0.
Q dim_orbit_polys(const Algebra& A, int m);
/// d_m - d_{m-1}.
Q dim_harmonic(const Algebra& A, int m);

/// Dimension of classical harmonic polynomials of degree m on R^n.
long classical_harmonic_dim(int n, int m);

}  // namespace jf
