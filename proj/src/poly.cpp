#include "jf/poly.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace jf {

// ---- MPoly ----

MPoly MPoly::constant(int nvars, const GQ& c) {
  MPoly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("MPoly::variable index out of range");
  Mono m(nvars, 0);
  m[i] = 1;
  return monomial(m);
}

MPoly MPoly::monomial(const Mono& m, const GQ& c) {
  MPoly p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

MPoly MPoly::linear(const Vec<GQ>& c) {
  int n = static_cast<int>(c.size());
  MPoly p(n);
  for (int i = 0; i < n; ++i) {
    Mono m(n, 0);
    m[i] = 1;
    p.add_term(m, c[i]);
  }
  return p;
}

void MPoly::add_term(const Mono& m, const GQ& c) {
  if (static_cast<int>(m.size()) != nvars_) throw std::invalid_argument("MPoly: monomial length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GQ MPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GQ(0) : it->second;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

MPoly MPoly::homogeneous_part(int d) const {
  MPoly p(nvars_);
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    if (s == d) p.terms_.emplace(m, c);
  }
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const GQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MPoly: variable count mismatch");
  MPoly p(a.nvars_);
  Mono m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = constant(nvars_, GQ(1)), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

MPoly MPoly::diff(int i) const {
  if (i < 0 || i >= nvars_) throw std::out_of_range("MPoly::diff index out of range");
  MPoly p(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Mono d = m;
    --d[i];
    p.terms_.emplace(d, c * GQ(static_cast<long>(m[i])));
  }
  return p;
}

MPoly MPoly::conj() const {
  MPoly p(nvars_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c.conj());
  return p;
}

MPoly MPoly::scale_args(const GQ& s) const {
  MPoly p(nvars_);
  for (const auto& [m, c] : terms_) {
    long d = 0;
    for (int e : m) d += e;
    p.add_term(m, c * gpow(s, d));
  }
  return p;
}

GQ MPoly::eval(const Vec<GQ>& z) const {
  if (static_cast<int>(z.size()) != nvars_) throw std::invalid_argument("MPoly::eval: point dimension mismatch");
  GQ s(0);
  for (const auto& [m, c] : terms_) {
    GQ t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t *= gpow(z[i], m[i]);
    s += t;
  }
  return s;
}

cplx MPoly::eval(const Vec<cplx>& z) const { return NumPoly(*this)(z); }

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      os << "*z" << i;
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::string MPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    arr.push_back({{"exponents", m},
                   {"re_num", c.re.get_num().get_str()},
                   {"re_den", c.re.get_den().get_str()},
                   {"im_num", c.im.get_num().get_str()},
                   {"im_den", c.im.get_den().get_str()}});
  }
  return arr.dump();
}

// ---- NumPoly ----

NumPoly::NumPoly(const MPoly& p) : nvars_(p.nvars()) {
  deg_ = std::max(0, p.degree());
  for (const auto& [m, c] : p.terms()) terms_.emplace_back(m, c.to_complex());
}

cplx NumPoly::operator()(const Vec<cplx>& z) const {
  if (static_cast<int>(z.size()) != nvars_) throw std::invalid_argument("NumPoly: point dimension mismatch");
  std::vector<std::vector<cplx>> pw(nvars_, std::vector<cplx>(deg_ + 1, cplx(1)));
  for (int i = 0; i < nvars_; ++i)
    for (int k = 1; k <= deg_; ++k) pw[i][k] = pw[i][k - 1] * z[i];
  cplx s = 0;
  for (const auto& [m, c] : terms_) {
    cplx t = c;
    for (int i = 0; i < nvars_; ++i) t *= pw[i][m[i]];
    s += t;
  }
  return s;
}

cplx NumPoly::operator()(const Vec<double>& x) const { return (*this)(Vec<cplx>(x.begin(), x.end())); }

// ---- helpers ----

MPoly pairing_poly(const Algebra& A, const Vec<GQ>& a) {
  A.check(a);
  Vec<GQ> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * GQ(A.gram()[i]);
  return MPoly::linear(c);
}

MPoly trace_poly(const Algebra& A) { return pairing_poly(A, Algebra::cast<GQ>(A.unit())); }

namespace {

MPoly mul_var(const MPoly& p, int d) {
  MPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    ++mm[d];
    r.add_term(mm, c);
  }
  return r;
}

}  // namespace

// ---- BesselOp ----

BesselOp::BesselOp(const Algebra& A) : A_(A) {
  int n = A.dim();
  const auto& g = A.gram();
  terms_.resize(n);
  first_.resize(n);
  for (int j = 0; j < n; ++j) {
    first_[j] = GQ(Q(A.lambda() / g[j]));
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        const Mat<Q>& P = A.quad_matrix(a, b);
        Q factor = (a == b ? Q(1) : Q(2)) / (g[a] * g[b]);
        for (int d = 0; d < n; ++d)
          if (sgn(P[j][d]) != 0) terms_[j].push_back({a, b, d, GQ(Q(P[j][d] * factor))});
      }
  }
}

MPoly BesselOp::coord(int j, const MPoly& f) const {
  int n = A_.dim();
  if (f.nvars() != n) throw std::invalid_argument("BesselOp: polynomial over the wrong algebra");
  MPoly res(n);
  std::map<std::pair<int, int>, MPoly> d2;
  for (const Term& t : terms_[j]) {
    auto key = std::make_pair(t.a, t.b);
    auto it = d2.find(key);
    if (it == d2.end()) it = d2.emplace(key, f.diff(t.a).diff(t.b)).first;
    if (it->second.is_zero()) continue;
    res += mul_var(it->second, t.d) * t.coef;
  }
  res += f.diff(j) * first_[j];
  return res;
}

VPoly BesselOp::apply(const MPoly& f) const {
  VPoly v;
  for (int j = 0; j < A_.dim(); ++j) v.push_back(coord(j, f));
  return v;
}

MPoly BesselOp::pair(const Vec<GQ>& a, const MPoly& f) const {
  A_.check(a);
  MPoly res(A_.dim());
  for (int j = 0; j < A_.dim(); ++j) {
    if (a[j].is_zero()) continue;
    res += coord(j, f) * (a[j] * GQ(A_.gram()[j]));
  }
  return res;
}

MPoly BesselOp::trace_part(const MPoly& f) const { return pair(Algebra::cast<GQ>(A_.unit()), f); }

// ---- weighted functions ----

WeightedFn weighted_bessel_coord(const BesselOp& B, int j, const WeightedFn& f) {
  const Algebra& A = B.algebra();
  int n = A.dim();
  GQ s(f.s);
  MPoly res = B.coord(j, f.p);
  if (sgn(f.s) != 0) {
    // 2 s (L(x) grad q)_j with (grad q)_b = dq/dz_b / g_b.
    MPoly lx(n);
    for (const auto& sc : A.structure()) {
      if (sc.c != j) continue;
      MPoly dq = f.p.diff(sc.b);
      if (dq.is_zero()) continue;
      lx += mul_var(dq, sc.a) * GQ(Q(sc.coef / A.gram()[sc.b]));
    }
    res += lx * (GQ(2) * s);
    res += mul_var(f.p, j) * (s * s);
    Q ej = A.unit()[j];
    if (sgn(ej) != 0) res += f.p * (s * GQ(Q(A.lambda() * ej)));
  }
  return {res, f.s};
}

WeightedFn weighted_bessel_pair(const BesselOp& B, const Vec<GQ>& a, const WeightedFn& f) {
  const Algebra& A = B.algebra();
  A.check(a);
  WeightedFn out{MPoly(A.dim()), f.s};
  for (int j = 0; j < A.dim(); ++j) {
    if (a[j].is_zero()) continue;
    out.p += weighted_bessel_coord(B, j, f).p * (a[j] * GQ(A.gram()[j]));
  }
  return out;
}

MPoly euler_apply(const MPoly& p) {
  MPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    long d = 0;
    for (int e : m) d += e;
    r.add_term(m, c * GQ(d));
  }
  return r;
}

MPoly derivation_apply(const Mat<GQ>& X, const MPoly& p) {
  int n = p.nvars();
  if (static_cast<int>(X.size()) != n) throw std::invalid_argument("derivation_apply: matrix size mismatch");
  MPoly r(n);
  for (int b = 0; b < n; ++b) {
    MPoly db = p.diff(b);
    if (db.is_zero()) continue;
    for (int d = 0; d < n; ++d)
      if (!X[b][d].is_zero()) r -= mul_var(db, d) * X[b][d];
  }
  return r;
}

GQ fischer_inner(const BesselOp& B, const MPoly& p, const MPoly& q) {
  int n = B.algebra().dim();
  if (p.nvars() != n || q.nvars() != n) throw std::invalid_argument("fischer_inner: polynomial over the wrong algebra");
  GQ result(0);
  int top = std::min(p.degree(), q.degree());
  Mono zero(n, 0);
  for (int d = 0; d <= top; ++d) {
    MPoly pd = p.homogeneous_part(d);
    if (pd.is_zero()) continue;
    MPoly qd = q.homogeneous_part(d).conj().scale_args(GQ(4));
    if (qd.is_zero()) continue;
    for (const auto& [m, c] : pd.terms()) {
      MPoly f = qd;
      for (int j = 0; j < n && !f.is_zero(); ++j)
        for (int t = 0; t < m[j] && !f.is_zero(); ++t) f = B.coord(j, f);
      result += c * f.coeff(zero);
    }
  }
  return result;
}

// ---- normal forms ----

int normal_form_nvars(const Algebra& A) {
  return A.kind() == AlgebraKind::SymMat ? A.matrix_size() : A.dim();
}

namespace {

std::vector<std::pair<int, int>> sym_pairs(const Algebra& A) {
  int k = A.matrix_size();
  std::vector<std::pair<int, int>> pr(A.dim());
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) pr[A.sym_index(i, j)] = {i, j};
  return pr;
}

void monomials_rec(int nvars, int deg, int pos, Mono& cur, std::vector<Mono>& out) {
  if (pos == nvars - 1) {
    cur[pos] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[pos] = e;
    monomials_rec(nvars, deg - e, pos + 1, cur, out);
  }
}

std::vector<Mono> all_monomials(int nvars, int deg) {
  std::vector<Mono> out;
  Mono cur(nvars, 0);
  monomials_rec(nvars, deg, 0, cur, out);
  return out;
}

}  // namespace

MPoly normal_form(const Algebra& A, const MPoly& p) {
  if (p.nvars() != A.dim()) throw std::invalid_argument("normal_form: polynomial over the wrong algebra");
  switch (A.kind()) {
    case AlgebraKind::Rank1:
      return p;
    case AlgebraKind::Minkowski: {
      int n = A.dim();
      MPoly out(n);
      std::vector<std::pair<Mono, GQ>> work(p.terms().begin(), p.terms().end());
      while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        if (m[0] < 2) {
          out.add_term(m, c);
          continue;
        }
        m[0] -= 2;
        for (int j = 1; j < n; ++j) {
          Mono mm = m;
          mm[j] += 2;
          work.emplace_back(mm, c);
        }
      }
      return out;
    }
    case AlgebraKind::SymMat: {
      auto pr = sym_pairs(A);
      int k = A.matrix_size();
      MPoly out(k);
      for (const auto& [m, c] : p.terms()) {
        Mono v(k, 0);
        for (int a = 0; a < A.dim(); ++a) {
          v[pr[a].first] += m[a];
          v[pr[a].second] += m[a];
        }
        out.add_term(v, c);
      }
      return out;
    }
  }
  throw std::logic_error("normal_form: unknown algebra");
}

MPoly lift_normal_form(const Algebra& A, const MPoly& nf) {
  if (A.kind() != AlgebraKind::SymMat) return nf;
  int k = A.matrix_size();
  if (nf.nvars() != k) throw std::invalid_argument("lift_normal_form: wrong variable count");
  MPoly out(A.dim());
  for (const auto& [v, c] : nf.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i)
      for (int t = 0; t < v[i]; ++t) idx.push_back(i);
    if (idx.size() % 2) throw std::invalid_argument("lift_normal_form: odd monomial is not a pullback");
    Mono m(A.dim(), 0);
    for (std::size_t t = 0; t < idx.size(); t += 2) ++m[A.sym_index(idx[t], idx[t + 1])];
    out.add_term(m, c);
  }
  return out;
}

std::vector<Mono> orbit_monomials(const Algebra& A, int m) {
  if (m < 0) return {};
  switch (A.kind()) {
    case AlgebraKind::Rank1:
      return {Mono{m}};
    case AlgebraKind::Minkowski: {
      std::vector<Mono> out;
      for (const Mono& mm : all_monomials(A.dim(), m))
        if (mm[0] <= 1) out.push_back(mm);
      return out;
    }
    case AlgebraKind::SymMat:
      return all_monomials(A.matrix_size(), 2 * m);
  }
  return {};
}

std::vector<MPoly> orbit_basis(const Algebra& A, int m) {
  std::vector<MPoly> out;
  for (const Mono& mm : orbit_monomials(A, m)) out.push_back(lift_normal_form(A, MPoly::monomial(mm)));
  return out;
}

}  // namespace jf
