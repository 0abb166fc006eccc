/**
 * @file jordan.hpp
 * @brief Simple Euclidean Jordan algebras R (free lambda), R^{1,n-1} and Sym(k,R).
 *
 * Elements are coordinate vectors against a fixed rational basis b_0..b_{n-1}
 * that is orthogonal for the trace form, with diagonal Gram g_a = (b_a|b_a).
 * Raw coordinates satisfy x_a = (b_a|x)/g_a.
 */
#pragma once

#include "jf/gq.hpp"
#include "jf/specialfn.hpp"

#include <complex>
#include <string>
#include <vector>

namespace jf {

template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<std::vector<T>>;

/// Converts an exact rational into the scalar type T.
template <class T>
T from_q(const Q& q);
template <>
inline Q from_q<Q>(const Q& q) { return q; }
template <>
inline GQ from_q<GQ>(const Q& q) { return GQ(q); }
template <>
inline double from_q<double>(const Q& q) { return q.get_d(); }
template <>
inline cplx from_q<cplx>(const Q& q) { return cplx(q.get_d(), 0.0); }

inline cplx to_cplx(const GQ& g) { return g.to_complex(); }

template <class T>
Mat<T> zero_mat(int n) {
  return Mat<T>(n, Vec<T>(n, T(0)));
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  int n = static_cast<int>(a.size());
  Mat<T> c = zero_mat<T>(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <class T>
Vec<T> mat_vec(const Mat<T>& a, const Vec<T>& x) {
  Vec<T> y(a.size(), T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

enum class AlgebraKind { Rank1, Minkowski, SymMat };

/// Structure constant b_a b_b = sum coef * b_c.
struct StructConst {
  int a, b, c;
  Q coef;
};

class Algebra {
 public:
  static Algebra rank1(const Q& lambda);
  static Algebra minkowski(int n);
  static Algebra symmat(int k);
  /// Parses "rank1:<lambda>", "minkowski:<n>" or "symmat:<k>".
  static Algebra parse(const std::string& desc);

  AlgebraKind kind() const { return kind_; }
  std::string kind_name() const;
  std::string param_str() const { return param_; }
  std::string descriptor() const { return kind_name() + ":" + param_; }

  int rank() const { return r_; }
  int dim() const { return n_; }
  const Q& multiplicity() const { return d_; }
  const Q& lambda() const { return lambda_; }
  Q r_lambda() const { return Q(r_ * lambda_); }
  double lambda_d() const { return lambda_.get_d(); }
  double r_lambda_d() const { return r_lambda().get_d(); }
  /// Matrix size k for Sym(k,R); zero otherwise.
  int matrix_size() const { return k_; }

  const Vec<Q>& gram() const { return gram_; }
  const std::vector<StructConst>& structure() const { return mult_; }
  /// Matrix of x -> P(b_a, b_b) x in raw coordinates.
  const Mat<Q>& quad_matrix(int a, int b) const { return pmat_[a * n_ + b]; }

  Vec<Q> unit() const { return unit_; }
  Vec<Q> basis_vector(int a) const;
  std::vector<Vec<Q>> jordan_frame() const;
  /// x0 in the Peirce space V_12 with (x0|x0) = 2; throws Unsupported for rank 1.
  Vec<Q> offdiag_unit() const;
  /// Basis index of E_ii (i == j) or E_ij + E_ji for Sym(k,R).
  int sym_index(int i, int j) const;

  template <class T>
  void check(const Vec<T>& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("element does not belong to this algebra");
  }

  template <class T>
  Vec<T> product(const Vec<T>& x, const Vec<T>& y) const {
    check(x);
    check(y);
    Vec<T> z(n_, T(0));
    for (const auto& s : mult_) z[s.c] += x[s.a] * y[s.b] * from_q<T>(s.coef);
    return z;
  }

  template <class T>
  T trace_form(const Vec<T>& x, const Vec<T>& y) const {
    check(x);
    check(y);
    T s(0);
    for (int a = 0; a < n_; ++a) s += x[a] * y[a] * from_q<T>(gram_[a]);
    return s;
  }

  template <class T>
  T trace(const Vec<T>& x) const {
    return trace_form(x, cast<T>(unit_));
  }

  /// Polarized quadratic representation P(x,y)z = x(yz) + y(xz) - (xy)z.
  template <class T>
  Vec<T> quad_rep(const Vec<T>& x, const Vec<T>& y, const Vec<T>& z) const {
    Vec<T> a = product(x, product(y, z));
    Vec<T> b = product(y, product(x, z));
    Vec<T> c = product(product(x, y), z);
    for (int i = 0; i < n_; ++i) a[i] += b[i] - c[i];
    return a;
  }

  /// Matrix of L(x) in raw coordinates.
  template <class T>
  Mat<T> lmat(const Vec<T>& x) const {
    check(x);
    Mat<T> m = zero_mat<T>(n_);
    for (const auto& s : mult_) m[s.c][s.b] += x[s.a] * from_q<T>(s.coef);
    return m;
  }

  /// Adjoint for the trace form, T* = G^{-1} T^t G.
  template <class T>
  Mat<T> adjoint(const Mat<T>& m) const {
    Mat<T> a = zero_mat<T>(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a[i][j] = m[j][i] * from_q<T>(gram_[j] / gram_[i]);
    return a;
  }

  /// Rank-one test P(w)z = (z|w)w on all basis vectors z, relative tolerance tol.
  bool in_min_orbit(const Vec<cplx>& w, double tol = 1e-10) const;
  /// Exact rank-one test over Gaussian rationals.
  bool in_min_orbit(const Vec<GQ>& w) const;
  /// Real minimal orbit: rank one with positive trace.
  bool in_xi(const Vec<double>& x, double tol = 1e-10) const;

  template <class T>
  static Vec<T> cast(const Vec<Q>& v) {
    Vec<T> out;
    out.reserve(v.size());
    for (const Q& q : v) out.push_back(from_q<T>(q));
    return out;
  }

 private:
  Algebra() = default;
  void finalize();

  AlgebraKind kind_ = AlgebraKind::Rank1;
  std::string param_;
  int r_ = 1, n_ = 1, k_ = 0;
  Q d_{0}, lambda_{1};
  Vec<Q> gram_;
  Vec<Q> unit_;
  std::vector<StructConst> mult_;
  std::vector<Mat<Q>> pmat_;
};

template <class T>
Mat<T> commutator(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> ab = mat_mul(a, b), ba = mat_mul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

}  // namespace jf
