/**
 * @file poly.hpp
 * @brief Exact multivariate polynomials over Gaussian rationals, the Bessel
 *        operator, Euler and derivation actions, the Bessel-Fischer product
 *        and normal forms modulo the ideal of the complex minimal orbit.
 */
#pragma once

#include "jf/jordan.hpp"

#include <map>
#include <string>

namespace jf {

using Mono = std::vector<int>;

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const GQ& c);
  static MPoly variable(int nvars, int i);
  static MPoly monomial(const Mono& m, const GQ& c = GQ(1));
  /// sum_a c_a z_a.
  static MPoly linear(const Vec<GQ>& c);

  int nvars() const { return nvars_; }
  const std::map<Mono, GQ>& terms() const { return terms_; }
  void add_term(const Mono& m, const GQ& c);
  GQ coeff(const Mono& m) const;

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  MPoly homogeneous_part(int d) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const GQ& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const GQ& c) { return a *= c; }
  friend MPoly operator*(const GQ& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  MPoly operator-() const { return *this * GQ(-1); }
  MPoly pow(int k) const;

  MPoly diff(int i) const;
  /// Coefficients conjugated, variables untouched.
  MPoly conj() const;
  /// p(s z).
  MPoly scale_args(const GQ& s) const;

  GQ eval(const Vec<GQ>& z) const;
  cplx eval(const Vec<cplx>& z) const;

  std::string str() const;
  /// JSON list of {exponents, re_num, re_den, im_num, im_den}.
  std::string to_json() const;

 private:
  int nvars_ = 0;
  std::map<Mono, GQ> terms_;
};

using VPoly = std::vector<MPoly>;

/// Floating-point copy of an MPoly for fast repeated evaluation.
class NumPoly {
 public:
  NumPoly() = default;
  explicit NumPoly(const MPoly& p);
  cplx operator()(const Vec<cplx>& z) const;
  cplx operator()(const Vec<double>& x) const;
  int degree() const { return deg_; }

 private:
  std::vector<std::pair<Mono, cplx>> terms_;
  int nvars_ = 0, deg_ = 0;
};

/// (a|z) for a in V_C: sum_a g_a a_a z_a.
MPoly pairing_poly(const Algebra& A, const Vec<GQ>& a);
/// tr(z).
MPoly trace_poly(const Algebra& A);

/// The Bessel operator of the algebra at its lambda, acting on raw coordinates.
class BesselOp {
 public:
  explicit BesselOp(const Algebra& A);

  const Algebra& algebra() const { return A_; }
  /// Raw coordinate j of the vector B f.
  MPoly coord(int j, const MPoly& f) const;
  VPoly apply(const MPoly& f) const;
  /// (a|B) f.
  MPoly pair(const Vec<GQ>& a, const MPoly& f) const;
  /// B_e f = (e|B) f.
  MPoly trace_part(const MPoly& f) const;

 private:
  struct Term {
    int a, b, d;  // coef * x_d * d^2/dx_a dx_b (a <= b)
    GQ coef;
  };
  Algebra A_;
  std::vector<std::vector<Term>> terms_;
  Vec<GQ> first_;  // lambda / g_j
};

/// p(z) * e^{s tr(z)}.
struct WeightedFn {
  MPoly p;
  Q s{0};
};

/// Raw coordinate j of B (q e^{s tr}), again of the form q' e^{s tr}.
WeightedFn weighted_bessel_coord(const BesselOp& B, int j, const WeightedFn& f);
/// (a|B) f for a in V_C.
WeightedFn weighted_bessel_pair(const BesselOp& B, const Vec<GQ>& a, const WeightedFn& f);

/// Euler operator sum_a z_a d/dz_a.
MPoly euler_apply(const MPoly& p);
/// (X.p)(x) = -D_{Xx} p(x) for a matrix X in raw coordinates.
MPoly derivation_apply(const Mat<GQ>& X, const MPoly& p);

/// Bessel-Fischer product [p,q] = p(B) conj(q)(4z) at z = 0.
GQ fischer_inner(const BesselOp& B, const MPoly& p, const MPoly& q);

/// Normal form of p restricted to the complex minimal orbit.
/// Minkowski: z_0^2 reduced to sum_{j>=1} z_j^2. Sym(k): pullback along v -> v v^t
/// into k variables. Rank 1: identity.
MPoly normal_form(const Algebra& A, const MPoly& p);
/// Raw polynomial whose normal form is the given normal-form polynomial.
MPoly lift_normal_form(const Algebra& A, const MPoly& nf);
/// Normal-form monomials spanning P^m(X).
std::vector<Mono> orbit_monomials(const Algebra& A, int m);
/// Lifted basis of P^m(X).
std::vector<MPoly> orbit_basis(const Algebra& A, int m);
/// Number of variables of normal forms.
int normal_form_nvars(const Algebra& A);

}  // namespace jf
