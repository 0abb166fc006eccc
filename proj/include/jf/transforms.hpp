/**
 * @file transforms.hpp
 * @brief Reproducing kernels, the Segal-Bargmann transform (numeric and exact),
 *        generalized Hermite functions, the unitary inversion operator, the
 *        Cayley transform, the actions d pi / d rho, the sl(2) radial model and
 *        the folding comparison for Sym(k,R).
 */
#pragma once

#include "jf/orbit.hpp"
#include "jf/poly.hpp"

#include <functional>
#include <map>

namespace jf {

// ---- reproducing kernels ----

/// K(z,w) = B((z|conj w)/4) = Gamma(lambda) I~_{lambda-1}(sqrt((z|conj w))).
cplx repro_kernel(const Algebra& A, const Vec<cplx>& z, const Vec<cplx>& w);
/// K^m(z,w) = (z|conj w)^m / (4^m m! (lambda)_m).
cplx repro_kernel_m(const Algebra& A, int m, const Vec<cplx>& z, const Vec<cplx>& w);

// ---- Hermite functions ----

/// Generalized Hermite functions h_a = e^{tr} prod_j B_j^{a_j} e^{-2tr}, where B_j is
/// the raw coordinate j of the Bessel operator. Then B_Xi h_a = z^a in raw coordinates.
class HermiteBasis {
 public:
  explicit HermiteBasis(const BesselOp& B) : B_(B) {}
  /// h_a as H_a(x) e^{-tr(x)}.
  WeightedFn get(const Mono& a);
  /// Coefficients c with P(x) = sum_a c_a H_a(x) as raw polynomials.
  std::map<Mono, GQ> expand(const MPoly& P);
  const BesselOp& bessel() const { return B_; }

 private:
  const MPoly& q(const Mono& a);  // B^a e^{-2tr} = q_a e^{-2tr}
  const BesselOp& B_;
  std::map<Mono, MPoly> cache_;
};

WeightedFn hermite_function(const BesselOp& B, const Mono& a);

/// All multi-indices of total degree <= d over n variables, graded.
std::vector<Mono> multi_indices(int n, int d);

// ---- Segal-Bargmann transform ----

/// e^{-tr z/2} int B((x|z)) e^{-tr x} f(x) d mu(x), with f given by its values at the nodes.
cplx segal_bargmann_numeric(const Algebra& A, const Quadrature& q, const std::vector<cplx>& fvals,
                            const Vec<cplx>& z);
/// Same transform for several functions sharing the kernel evaluations.
std::vector<cplx> segal_bargmann_numeric(const Algebra& A, const Quadrature& q,
                                         const std::vector<std::vector<cplx>>& fvals, const Vec<cplx>& z);
/// Values of a weighted function at the quadrature nodes.
std::vector<cplx> sample(const Quadrature& q, const WeightedFn& f, const Algebra& A);
/// sum c_a z^a in normal form.
MPoly segal_bargmann_exact(const Algebra& A, const std::map<Mono, GQ>& coeffs);
/// Rank-one inverse transform e^{-x} int B(x conj z) e^{-conj z/2} F(z) omega d nu.
cplx inverse_segal_bargmann_rank1(const Algebra& A, const FockQuadrature& fq,
                                  const std::function<cplx(cplx)>& F, double x);

// ---- unitary inversion ----

/// 2^{-r lambda} Gamma(lambda) int J~_{lambda-1}(2 sqrt((x|y))) f(y) d mu(y).
cplx unitary_inversion_numeric(const Algebra& A, const Quadrature& q, const std::vector<cplx>& fvals,
                               const Vec<double>& x);
/// Same operator for several functions sharing the kernel evaluations.
std::vector<cplx> unitary_inversion_numeric(const Algebra& A, const Quadrature& q,
                                            const std::vector<std::vector<cplx>>& fvals, const Vec<double>& x);
/// Exact action on Hermite coefficients: c_a -> (-1)^{|a|} c_a.
std::map<Mono, GQ> unitary_inversion_exact(const std::map<Mono, GQ>& coeffs);

// ---- Lie algebra actions ----

/// (u, T, v) with T = L(a) + D in raw coordinates.
struct GTriple {
  Vec<GQ> u;
  Mat<GQ> T;
  Vec<GQ> v;
};

GTriple triple_E(const Algebra& A);
GTriple triple_H(const Algebra& A);
GTriple triple_F(const Algebra& A);

enum class CayleyDirection { Forward, Inverse };
GTriple cayley_transform(const Algebra& A, const GTriple& X, CayleyDirection dir);
bool triple_equal(const GTriple& a, const GTriple& b);

/// d pi(X) on p e^{s tr}: i(u|x) + D_{T* x} + (r lambda / 2n) Tr T + i(v|B).
WeightedFn dpi_apply(const BesselOp& B, const GTriple& X, const WeightedFn& f);
/// d rho(X) = d pi_C(c(X)) on polynomials over X.
MPoly drho_apply(const BesselOp& B, const GTriple& X, const MPoly& p);

// ---- sl(2) radial model ----

/// e^{-t} sum_p c_p t^p with integer (possibly negative) powers.
struct RadialFn {
  std::map<int, Q> c;
  bool operator==(const RadialFn& o) const;
  RadialFn& operator+=(const RadialFn& o);
  RadialFn scaled(const Q& k) const;
  double operator()(double t) const;
};

/// Radial model d pi_s with mu = r lambda - 1 and imaginary unit factored out where
/// present: element tags e, h, f and the Cayley-rotated et, ht, ft.
enum class Sl2Element { e, h, f, et, ht, ft };

struct Sl2Model {
  Q s, mu;
  int m = 0;
  /// phi_k^s = (-1)^k k! t^m e^{-t} L_k^{s-1}(2t).
  RadialFn phi(int k) const;
  /// Result as a pair (real part, coefficient of i).
  std::pair<RadialFn, RadialFn> apply(Sl2Element x, const RadialFn& f) const;
};

/// s = r lambda + 2m, mu = r lambda - 1.
Sl2Model sl2_model(const Algebra& A, int m);

/// Phi_m(f (x) h)(x) = f(|x|) h(x/|x|) = |x|^{-m} f(|x|) h(x) for a harmonic h of degree m.
WeightedFn phi_m(const Algebra& A, int m, const RadialFn& f, const MPoly& h);

// ---- folding comparison for Sym(k,R) ----

/// Classical transform e^{-z.z/2} int_{R^k} e^{2 z.x} e^{-|x|^2} u(x) dx, where
/// u(x) = e^{-c |x|^2} poly(x) is given by c and a callable for poly.
cplx classical_segal_bargmann(int k, double c, const std::function<double(const std::vector<double>&)>& poly,
                              const std::vector<cplx>& z, int order = 40);

struct FoldingReport {
  cplx scalar;
  double residual = 0;
};

/// Fits L(z) = scalar * R(z) where L = (B_Xi f)(z z^t) and R = B(f o p)(z).
FoldingReport folding_fit(const std::vector<cplx>& lhs, const std::vector<cplx>& rhs);

}  // namespace jf
