#include "jf/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace jf {

Algebra Algebra::rank1(const Q& lambda) {
  if (sgn(lambda) <= 0) throw std::invalid_argument("rank1: lambda must be positive");
  Algebra A;
  A.kind_ = AlgebraKind::Rank1;
  Q l = lambda;
  l.canonicalize();
  A.param_ = l.get_str();
  A.r_ = 1;
  A.n_ = 1;
  A.d_ = 0;
  A.lambda_ = l;
  A.gram_ = {Q(1)};
  A.unit_ = {Q(1)};
  A.mult_ = {{0, 0, 0, Q(1)}};
  A.finalize();
  return A;
}

Algebra Algebra::minkowski(int n) {
  if (n < 3) throw std::invalid_argument("minkowski: n must be >= 3");
  Algebra A;
  A.kind_ = AlgebraKind::Minkowski;
  A.param_ = std::to_string(n);
  A.r_ = 2;
  A.n_ = n;
  A.d_ = n - 2;
  A.lambda_ = Q(n - 2, 2);
  A.lambda_.canonicalize();
  A.gram_.assign(n, Q(2));
  A.unit_.assign(n, Q(0));
  A.unit_[0] = 1;
  for (int j = 0; j < n; ++j) {
    A.mult_.push_back({0, j, j, Q(1)});
    if (j > 0) {
      A.mult_.push_back({j, 0, j, Q(1)});
      A.mult_.push_back({j, j, 0, Q(1)});
    }
  }
  A.finalize();
  return A;
}

Algebra Algebra::symmat(int k) {
  if (k < 2) throw std::invalid_argument("symmat: k must be >= 2");
  Algebra A;
  A.kind_ = AlgebraKind::SymMat;
  A.param_ = std::to_string(k);
  A.k_ = k;
  A.r_ = k;
  A.n_ = k * (k + 1) / 2;
  A.d_ = 1;
  A.lambda_ = Q(1, 2);
  int n = A.n_;
  // Basis matrices: E_ii first, then E_ij + E_ji for i < j.
  std::vector<Mat<Q>> bm;
  for (int i = 0; i < k; ++i) {
    Mat<Q> m = zero_mat<Q>(k);
    m[i][i] = 1;
    bm.push_back(m);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Mat<Q> m = zero_mat<Q>(k);
      m[i][j] = 1;
      m[j][i] = 1;
      bm.push_back(m);
    }
  A.gram_.resize(n);
  for (int a = 0; a < n; ++a) {
    Q tr = 0;
    Mat<Q> sq = mat_mul(bm[a], bm[a]);
    for (int i = 0; i < k; ++i) tr += sq[i][i];
    A.gram_[a] = tr;
  }
  A.unit_.assign(n, Q(0));
  for (int i = 0; i < k; ++i) A.unit_[i] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Mat<Q> ab = mat_mul(bm[a], bm[b]), ba = mat_mul(bm[b], bm[a]);
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
          Q v = (ab[i][j] + ba[i][j]) / 2;
          if (sgn(v) != 0) A.mult_.push_back({a, b, A.sym_index(i, j), v});
        }
    }
  A.finalize();
  return A;
}

Algebra Algebra::parse(const std::string& desc) {
  auto colon = desc.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("algebra descriptor must be kind:param");
  std::string kind = desc.substr(0, colon), param = desc.substr(colon + 1);
  std::transform(kind.begin(), kind.end(), kind.begin(), ::tolower);
  if (kind == "rank1") {
    Algebra A = rank1(parse_rational(param));
    A.param_ = param;
    return A;
  }
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(param, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("algebra parameter must be an integer: " + param);
  }
  if (used != param.size()) throw std::invalid_argument("algebra parameter must be an integer: " + param);
  if (kind == "minkowski") return minkowski(v);
  if (kind == "symmat") return symmat(v);
  throw std::invalid_argument("unknown algebra kind: " + kind);
}

std::string Algebra::kind_name() const {
  switch (kind_) {
    case AlgebraKind::Rank1:
      return "rank1";
    case AlgebraKind::Minkowski:
      return "minkowski";
    case AlgebraKind::SymMat:
      return "symmat";
  }
  return "unknown";
}

void Algebra::finalize() {
  pmat_.clear();
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      Mat<Q> m = zero_mat<Q>(n_);
      Vec<Q> ba = basis_vector(a), bb = basis_vector(b);
      for (int c = 0; c < n_; ++c) {
        Vec<Q> col = quad_rep(ba, bb, basis_vector(c));
        for (int i = 0; i < n_; ++i) m[i][c] = col[i];
      }
      pmat_.push_back(std::move(m));
    }
}

Vec<Q> Algebra::basis_vector(int a) const {
  if (a < 0 || a >= n_) throw std::out_of_range("basis index out of range");
  Vec<Q> v(n_, Q(0));
  v[a] = 1;
  return v;
}

std::vector<Vec<Q>> Algebra::jordan_frame() const {
  std::vector<Vec<Q>> f;
  switch (kind_) {
    case AlgebraKind::Rank1:
      f.push_back(unit_);
      break;
    case AlgebraKind::Minkowski: {
      Vec<Q> c1(n_, Q(0)), c2(n_, Q(0));
      c1[0] = c2[0] = Q(1, 2);
      c1[n_ - 1] = Q(1, 2);
      c2[n_ - 1] = Q(-1, 2);
      f = {c1, c2};
      break;
    }
    case AlgebraKind::SymMat:
      for (int i = 0; i < k_; ++i) f.push_back(basis_vector(i));
      break;
  }
  return f;
}

Vec<Q> Algebra::offdiag_unit() const {
  switch (kind_) {
    case AlgebraKind::Rank1:
      throw Unsupported("offdiag_unit: rank-one algebra has no Peirce space V_12");
    case AlgebraKind::Minkowski:
      return basis_vector(1);
    case AlgebraKind::SymMat:
      return basis_vector(sym_index(0, 1));
  }
  throw Unsupported("offdiag_unit");
}

int Algebra::sym_index(int i, int j) const {
  if (kind_ != AlgebraKind::SymMat) throw Unsupported("sym_index requires Sym(k,R)");
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= k_) throw std::out_of_range("sym_index out of range");
  if (i == j) return i;
  // Off-diagonal pairs are enumerated row by row after the k diagonal entries.
  int idx = k_;
  for (int a = 0; a < i; ++a) idx += k_ - a - 1;
  return idx + (j - i - 1);
}

bool Algebra::in_min_orbit(const Vec<cplx>& w, double tol) const {
  check(w);
  double scale = 0;
  for (const auto& c : w) scale = std::max(scale, std::abs(c));
  if (scale == 0) return false;
  for (int c = 0; c < n_; ++c) {
    Vec<cplx> z = cast<cplx>(basis_vector(c));
    Vec<cplx> lhs = quad_rep(w, w, z);
    cplx s = trace_form(z, w);
    for (int i = 0; i < n_; ++i)
      if (std::abs(lhs[i] - s * w[i]) > tol * scale * scale * scale) return false;
  }
  return true;
}

bool Algebra::in_min_orbit(const Vec<GQ>& w) const {
  check(w);
  bool nonzero = std::any_of(w.begin(), w.end(), [](const GQ& g) { return !g.is_zero(); });
  if (!nonzero) return false;
  for (int c = 0; c < n_; ++c) {
    Vec<GQ> z = cast<GQ>(basis_vector(c));
    Vec<GQ> lhs = quad_rep(w, w, z);
    GQ s = trace_form(z, w);
    for (int i = 0; i < n_; ++i)
      if (lhs[i] != s * w[i]) return false;
  }
  return true;
}

bool Algebra::in_xi(const Vec<double>& x, double tol) const {
  Vec<cplx> w(x.begin(), x.end());
  return trace(x) > 0 && in_min_orbit(w, tol);
}

}  // namespace jf
