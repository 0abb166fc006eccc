#include "jf/harmonics.hpp"

#include "jf/linalg.hpp"

namespace jf {

Vec<GQ> orbit_coordinates(const Algebra& A, const MPoly& p, int m) {
  std::vector<Mono> monos = orbit_monomials(A, m);
  std::map<Mono, int> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = static_cast<int>(i);
  MPoly nf = normal_form(A, p);
  Vec<GQ> c(monos.size(), GQ(0));
  for (const auto& [mono, coef] : nf.terms()) {
    auto it = idx.find(mono);
    if (it == idx.end()) throw std::invalid_argument("orbit_coordinates: polynomial is not of degree m on X");
    c[it->second] = coef;
  }
  return c;
}

Mat<GQ> trace_bessel_matrix(const BesselOp& B, int m) {
  const Algebra& A = B.algebra();
  std::vector<MPoly> basis = orbit_basis(A, m);
  std::size_t rows = orbit_monomials(A, m - 1).size();
  Mat<GQ> M(rows, Vec<GQ>(basis.size(), GQ(0)));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (m == 0) break;
    Vec<GQ> c = orbit_coordinates(A, B.trace_part(basis[i]), m - 1);
    for (std::size_t r = 0; r < rows; ++r) M[r][i] = c[r];
  }
  return M;
}

HarmonicBasis harmonic_basis(const BesselOp& B, int m) {
  if (m < 0) throw std::invalid_argument("harmonic_basis: negative degree");
  const Algebra& A = B.algebra();
  std::vector<MPoly> basis = orbit_basis(A, m);
  HarmonicBasis H;
  H.m = m;
  Mat<GQ> M = trace_bessel_matrix(B, m);
  for (const Vec<GQ>& v : nullspace(M, static_cast<int>(basis.size()))) {
    MPoly h(A.dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!v[i].is_zero()) h += basis[i] * v[i];
    H.basis.push_back(h);
  }
  return H;
}

std::vector<MPoly> harmonic_decompose(const BesselOp& B, const MPoly& p) {
  if (!p.is_homogeneous()) throw std::invalid_argument("harmonic_decompose: input must be homogeneous");
  const Algebra& A = B.algebra();
  int n = A.dim();
  int m = std::max(0, p.degree());
  MPoly tr = trace_poly(A);
  // powers[i] = B_e^i p
  std::vector<MPoly> powers{p};
  for (int i = 1; i <= m; ++i) powers.push_back(B.trace_part(powers.back()));
  std::vector<MPoly> out;
  Q rl = A.r_lambda();
  for (int k = 0; k <= m; ++k) {
    MPoly h(n);
    Q a = rl + 2 * m - 2 * k;
    for (int j = 0; k + j <= m; ++j) {
      if (powers[k + j].is_zero()) continue;
      // (-1)^j / (j! k! (a)_k (a-j-1)_j)
      Q c = factorial_q(j) * factorial_q(k) * pochhammer(a, k) * pochhammer(Q(a - j - 1), j);
      c = Q(1) / c;
      if (j % 2) c = -c;
      h += tr.pow(j) * powers[k + j] * GQ(c);
    }
    out.push_back(h);
  }
  return out;
}

MPoly spherical_vector(const Algebra& A, int m) {
  if (A.rank() < 2) throw Unsupported("spherical_vector: requires rank >= 2");
  if (m < 0) throw std::invalid_argument("spherical_vector: negative degree");
  MPoly tr = trace_poly(A);
  MPoly xc = pairing_poly(A, Algebra::cast<GQ>(A.jordan_frame()[0]));
  Q b = m + A.r_lambda() - 1;
  MPoly out(A.dim());
  for (int j = 0; j <= m; ++j) {
    Q c = pochhammer(Q(-m), j) * pochhammer(b, j) / (pochhammer(A.lambda(), j) * factorial_q(j));
    out += xc.pow(j) * tr.pow(m - j) * GQ(c);
  }
  return out;
}

Vec<GQ> highest_weight_direction(const Algebra& A) {
  if (A.rank() < 2) throw Unsupported("highest_weight_direction: requires rank >= 2");
  auto f = A.jordan_frame();
  Vec<Q> x0 = A.offdiag_unit();
  Vec<GQ> a(A.dim());
  for (int i = 0; i < A.dim(); ++i) a[i] = GQ(Q(f[0][i] - f[1][i]), x0[i]);
  return a;
}

MPoly highest_weight_vector(const Algebra& A, int m) {
  return pairing_poly(A, highest_weight_direction(A)).pow(m);
}

Mat<GQ> x0_derivation(const Algebra& A) {
  auto f = A.jordan_frame();
  Vec<GQ> c1 = Algebra::cast<GQ>(f.at(0));
  Vec<GQ> x0 = Algebra::cast<GQ>(A.offdiag_unit());
  return commutator(A.lmat(c1), A.lmat(x0));
}

Q dim_orbit_polys(const Algebra& A, int m) {
  if (m < 0) return Q(0);
  Q nr(A.dim(), A.rank());
  nr.canonicalize();
  return pochhammer(nr, m) * pochhammer(A.r_lambda(), m) / (factorial_q(m) * pochhammer(A.lambda(), m));
}

Q dim_harmonic(const Algebra& A, int m) { return dim_orbit_polys(A, m) - dim_orbit_polys(A, m - 1); }

long classical_harmonic_dim(int n, int m) {
  if (m < 0) return 0;
  Q v = binomial_q(n + m - 1, m) - binomial_q(n + m - 3, m - 2);
  return v.get_num().get_si();
}

}  // namespace jf
