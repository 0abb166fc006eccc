#include "jf/transforms.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace jf {

namespace {

SeriesControl wide_control() {
  SeriesControl c;
  c.max_terms = 4000;
  return c;
}

GQ imag_unit() { return GQ::i(); }

Vec<GQ> scale(const Vec<GQ>& v, const GQ& c) {
  Vec<GQ> r(v);
  for (auto& x : r) x *= c;
  return r;
}

Vec<GQ> add(const Vec<GQ>& a, const Vec<GQ>& b) {
  Vec<GQ> r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Mat<GQ> mat_add(const Mat<GQ>& a, const Mat<GQ>& b) {
  Mat<GQ> r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[i][j] += b[i][j];
  return r;
}

Mat<GQ> mat_scale(const Mat<GQ>& a, const GQ& c) {
  Mat<GQ> r(a);
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

}  // namespace

// ---- reproducing kernels ----

cplx repro_kernel(const Algebra& A, const Vec<cplx>& z, const Vec<cplx>& w) {
  Vec<cplx> wc(w);
  for (auto& c : wc) c = std::conj(c);
  return kernel_B(A.lambda_d(), A.trace_form(z, wc) / 4.0, wide_control());
}

cplx repro_kernel_m(const Algebra& A, int m, const Vec<cplx>& z, const Vec<cplx>& w) {
  Vec<cplx> wc(w);
  for (auto& c : wc) c = std::conj(c);
  cplx p = A.trace_form(z, wc);
  return std::pow(p, m) / (std::pow(4.0, m) * std::tgamma(m + 1.0) * pochhammer_d(A.lambda_d(), m));
}

// ---- Hermite functions ----

const MPoly& HermiteBasis::q(const Mono& a) {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  int n = B_.algebra().dim();
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("HermiteBasis: multi-index length mismatch");
  int j = 0;
  while (j < n && a[j] == 0) ++j;
  MPoly res(n);
  if (j == n) {
    res = MPoly::constant(n, GQ(1));
  } else {
    Mono prev = a;
    --prev[j];
    WeightedFn f{q(prev), Q(-2)};
    res = weighted_bessel_coord(B_, j, f).p;
  }
  return cache_.emplace(a, std::move(res)).first->second;
}

WeightedFn HermiteBasis::get(const Mono& a) { return {q(a), Q(-1)}; }

std::map<Mono, GQ> HermiteBasis::expand(const MPoly& P) {
  std::map<Mono, GQ> out;
  MPoly work = P;
  while (!work.is_zero()) {
    int best = -1;
    Mono top;
    GQ c;
    for (const auto& [m, v] : work.terms()) {
      int d = 0;
      for (int e : m) d += e;
      if (d > best) {
        best = d;
        top = m;
        c = v;
      }
    }
    GQ k = c / GQ(qpow(Q(4), best));
    out[top] += k;
    work -= q(top) * k;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

WeightedFn hermite_function(const BesselOp& B, const Mono& a) {
  HermiteBasis hb(B);
  return hb.get(a);
}

std::vector<Mono> multi_indices(int n, int d) {
  std::vector<Mono> out;
  for (int deg = 0; deg <= d; ++deg) {
    Mono cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == n - 1) {
        cur[pos] = left;
        out.push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        rec(pos + 1, left - e);
      }
    };
    rec(0, deg);
  }
  return out;
}

// ---- Segal-Bargmann transform ----

std::vector<cplx> sample(const Quadrature& q, const WeightedFn& f, const Algebra& A) {
  NumPoly p(f.p);
  double s = f.s.get_d();
  std::vector<cplx> v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) v[i] = p(q.nodes[i]) * std::exp(s * A.trace(q.nodes[i]));
  return v;
}

cplx segal_bargmann_numeric(const Algebra& A, const Quadrature& q, const std::vector<cplx>& fvals,
                            const Vec<cplx>& z) {
  if (q.algebra != A.descriptor()) throw std::invalid_argument("segal_bargmann_numeric: quadrature/algebra mismatch");
  if (fvals.size() != q.size()) throw std::invalid_argument("segal_bargmann_numeric: sample count mismatch");
  A.check(z);
  SeriesControl ctrl = wide_control();
  double lambda = A.lambda_d();
  cplx sum = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    double t = q.radii[i];
    double mag = std::abs(fvals[i]);
    if (mag == 0) continue;
    Vec<cplx> x(q.nodes[i].begin(), q.nodes[i].end());
    cplx arg = A.trace_form(x, z);
    // |B(arg)| <= e^{2 sqrt|arg|}; skip nodes that cannot contribute.
    if (std::log(q.weights[i] * mag) - t + 2.0 * std::sqrt(std::abs(arg)) < -80.0) continue;
    sum += q.weights[i] * std::exp(-t) * fvals[i] * kernel_B(lambda, arg, ctrl);
  }
  return std::exp(-A.trace(z) / 2.0) * sum;
}

std::vector<cplx> segal_bargmann_numeric(const Algebra& A, const Quadrature& q,
                                         const std::vector<std::vector<cplx>>& fvals, const Vec<cplx>& z) {
  if (q.algebra != A.descriptor()) throw std::invalid_argument("segal_bargmann_numeric: quadrature/algebra mismatch");
  std::vector<double> mag(q.size(), 0.0);
  for (const auto& f : fvals) {
    if (f.size() != q.size()) throw std::invalid_argument("segal_bargmann_numeric: sample count mismatch");
    for (std::size_t i = 0; i < q.size(); ++i) mag[i] = std::max(mag[i], std::abs(f[i]));
  }
  A.check(z);
  SeriesControl ctrl = wide_control();
  double lambda = A.lambda_d();
  std::vector<cplx> sums(fvals.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    double t = q.radii[i];
    if (mag[i] == 0) continue;
    Vec<cplx> x(q.nodes[i].begin(), q.nodes[i].end());
    cplx arg = A.trace_form(x, z);
    if (std::log(q.weights[i] * mag[i]) - t + 2.0 * std::sqrt(std::abs(arg)) < -80.0) continue;
    cplx k = q.weights[i] * std::exp(-t) * kernel_B(lambda, arg, ctrl);
    for (std::size_t f = 0; f < fvals.size(); ++f) sums[f] += k * fvals[f][i];
  }
  cplx pre = std::exp(-A.trace(z) / 2.0);
  for (auto& v : sums) v *= pre;
  return sums;
}

MPoly segal_bargmann_exact(const Algebra& A, const std::map<Mono, GQ>& coeffs) {
  MPoly p(A.dim());
  for (const auto& [a, c] : coeffs) p += MPoly::monomial(a, c);
  return normal_form(A, p);
}

cplx inverse_segal_bargmann_rank1(const Algebra& A, const FockQuadrature& fq, const std::function<cplx(cplx)>& F,
                                  double x) {
  if (A.kind() != AlgebraKind::Rank1) throw Unsupported("inverse_segal_bargmann_rank1 requires a rank-one algebra");
  SeriesControl ctrl = wide_control();
  double lambda = A.lambda_d();
  cplx sum = 0;
  for (std::size_t i = 0; i < fq.size(); ++i) {
    cplx zb = std::conj(fq.nodes[i]);
    cplx Fz = F(fq.nodes[i]);
    if (std::log(fq.weights[i] * std::abs(Fz) + 1e-300) + 2.0 * std::sqrt(x * std::abs(zb)) -
            zb.real() / 2.0 < -80.0)
      continue;
    sum += fq.weights[i] * kernel_B(lambda, x * zb, ctrl) * std::exp(-zb / 2.0) * Fz;
  }
  return std::exp(-x) * sum;
}

// ---- unitary inversion ----

cplx unitary_inversion_numeric(const Algebra& A, const Quadrature& q, const std::vector<cplx>& fvals,
                               const Vec<double>& x) {
  if (q.algebra != A.descriptor()) throw std::invalid_argument("unitary_inversion_numeric: quadrature/algebra mismatch");
  if (fvals.size() != q.size()) throw std::invalid_argument("unitary_inversion_numeric: sample count mismatch");
  A.check(x);
  SeriesControl ctrl = wide_control();
  double lambda = A.lambda_d(), rl = A.r_lambda_d();
  cplx sum = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (fvals[i] == 0.0) continue;
    double arg = A.trace_form(x, q.nodes[i]);
    sum += q.weights[i] * fvals[i] * kernel_F(rl, lambda, std::max(arg, 0.0), ctrl);
  }
  return sum;
}

std::vector<cplx> unitary_inversion_numeric(const Algebra& A, const Quadrature& q,
                                            const std::vector<std::vector<cplx>>& fvals, const Vec<double>& x) {
  if (q.algebra != A.descriptor()) throw std::invalid_argument("unitary_inversion_numeric: quadrature/algebra mismatch");
  for (const auto& f : fvals)
    if (f.size() != q.size()) throw std::invalid_argument("unitary_inversion_numeric: sample count mismatch");
  A.check(x);
  SeriesControl ctrl = wide_control();
  double lambda = A.lambda_d(), rl = A.r_lambda_d();
  std::vector<cplx> sums(fvals.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    double arg = A.trace_form(x, q.nodes[i]);
    cplx k = q.weights[i] * kernel_F(rl, lambda, std::max(arg, 0.0), ctrl);
    for (std::size_t f = 0; f < fvals.size(); ++f) sums[f] += k * fvals[f][i];
  }
  return sums;
}

std::map<Mono, GQ> unitary_inversion_exact(const std::map<Mono, GQ>& coeffs) {
  std::map<Mono, GQ> out;
  for (const auto& [a, c] : coeffs) {
    int d = 0;
    for (int e : a) d += e;
    out[a] = (d % 2) ? -c : c;
  }
  return out;
}

// ---- Lie algebra actions ----

GTriple triple_E(const Algebra& A) {
  int n = A.dim();
  return {Algebra::cast<GQ>(A.unit()), zero_mat<GQ>(n), Vec<GQ>(n, GQ(0))};
}

GTriple triple_H(const Algebra& A) {
  int n = A.dim();
  Mat<GQ> T = zero_mat<GQ>(n);
  for (int i = 0; i < n; ++i) T[i][i] = GQ(2);
  return {Vec<GQ>(n, GQ(0)), T, Vec<GQ>(n, GQ(0))};
}

GTriple triple_F(const Algebra& A) {
  int n = A.dim();
  return {Vec<GQ>(n, GQ(0)), zero_mat<GQ>(n), Algebra::cast<GQ>(A.unit())};
}

GTriple cayley_transform(const Algebra& A, const GTriple& X, CayleyDirection dir) {
  Vec<GQ> e = Algebra::cast<GQ>(A.unit());
  Vec<GQ> a = mat_vec(X.T, e);
  Mat<GQ> D = mat_add(X.T, mat_scale(A.lmat(a), GQ(-1)));
  GQ i = imag_unit();
  GTriple Y;
  if (dir == CayleyDirection::Forward) {
    Y.u = scale(add(add(X.u, scale(a, i)), X.v), GQ(Q(1, 4)));
    Y.T = mat_add(D, mat_scale(A.lmat(add(X.u, scale(X.v, GQ(-1)))), i));
    Y.v = add(add(X.u, scale(a, -i)), X.v);
  } else {
    Vec<GQ> w = scale(add(scale(X.u, GQ(4)), X.v), GQ(Q(1, 2)));  // (4u' + v')/2
    Y.u = scale(add(w, scale(a, -i)), GQ(Q(1, 2)));
    Y.v = scale(add(w, scale(a, i)), GQ(Q(1, 2)));
    Vec<GQ> na = scale(add(scale(X.u, GQ(4)), scale(X.v, GQ(-1))), GQ(Q(0), Q(-1, 2)));
    Y.T = mat_add(A.lmat(na), D);
  }
  return Y;
}

bool triple_equal(const GTriple& a, const GTriple& b) { return a.u == b.u && a.T == b.T && a.v == b.v; }

WeightedFn dpi_apply(const BesselOp& B, const GTriple& X, const WeightedFn& f) {
  const Algebra& A = B.algebra();
  int n = A.dim();
  GQ i = imag_unit();
  WeightedFn out{MPoly(n), f.s};
  out.p += pairing_poly(A, X.u) * f.p * i;
  Mat<GQ> Ts = A.adjoint(X.T);
  out.p -= derivation_apply(Ts, f.p);  // D_{T* x} p
  if (sgn(f.s) != 0) {
    Vec<GQ> Te = mat_vec(X.T, Algebra::cast<GQ>(A.unit()));
    out.p += pairing_poly(A, Te) * f.p * GQ(f.s);
  }
  GQ trT(0);
  for (int k = 0; k < n; ++k) trT += X.T[k][k];
  out.p += f.p * (trT * GQ(Q(A.r_lambda() / (2 * n))));
  bool has_v = false;
  for (const auto& c : X.v) has_v = has_v || !c.is_zero();
  if (has_v) out.p += weighted_bessel_pair(B, X.v, f).p * i;
  return out;
}

MPoly drho_apply(const BesselOp& B, const GTriple& X, const MPoly& p) {
  GTriple cx = cayley_transform(B.algebra(), X, CayleyDirection::Forward);
  return dpi_apply(B, cx, WeightedFn{p, Q(0)}).p;
}

// ---- sl(2) radial model ----

bool RadialFn::operator==(const RadialFn& o) const {
  auto clean = [](const std::map<int, Q>& m) {
    std::map<int, Q> r;
    for (const auto& [k, v] : m)
      if (sgn(v) != 0) r[k] = v;
    return r;
  };
  return clean(c) == clean(o.c);
}

RadialFn& RadialFn::operator+=(const RadialFn& o) {
  for (const auto& [k, v] : o.c) c[k] += v;
  return *this;
}

RadialFn RadialFn::scaled(const Q& k) const {
  RadialFn r;
  for (const auto& [p, v] : c) r.c[p] = v * k;
  return r;
}

double RadialFn::operator()(double t) const {
  double s = 0;
  for (const auto& [p, v] : c) s += v.get_d() * std::pow(t, p);
  return s * std::exp(-t);
}

namespace {

RadialFn rderiv(const RadialFn& f) {
  RadialFn r;
  for (const auto& [p, v] : f.c) {
    if (p != 0) r.c[p - 1] += v * p;
    r.c[p] -= v;
  }
  return r;
}

RadialFn rshift(const RadialFn& f, int k) {
  RadialFn r;
  for (const auto& [p, v] : f.c) r.c[p + k] += v;
  return r;
}

}  // namespace

RadialFn Sl2Model::phi(int k) const {
  if (k < 0) return RadialFn{};
  RadialFn r;
  Q alpha = s - 1;
  for (int j = 0; j <= k; ++j) {
    Q c = factorial_q(k) * pochhammer(Q(alpha + j + 1), k - j) / factorial_q(k - j) * qpow(Q(2), j) /
          factorial_q(j);
    if ((k + j) % 2) c = -c;
    r.c[m + j] += c;
  }
  return r;
}

std::pair<RadialFn, RadialFn> Sl2Model::apply(Sl2Element x, const RadialFn& f) const {
  // e = i t, h = 2t d + (mu+1), f = i (t d^2 + (mu+1) d - C/t).
  Q C = ((s - 1) * (s - 1) - mu * mu) / 4;
  RadialFn te = rshift(f, 1);
  RadialFn d1 = rderiv(f);
  RadialFn th = rshift(d1, 1).scaled(Q(2));
  th += f.scaled(Q(mu + 1));
  RadialFn tf = rshift(rderiv(d1), 1);
  tf += d1.scaled(Q(mu + 1));
  tf += rshift(f, -1).scaled(Q(-C));
  RadialFn zero;
  switch (x) {
    case Sl2Element::e:
      return {zero, te};
    case Sl2Element::h:
      return {th, zero};
    case Sl2Element::f:
      return {zero, tf};
    case Sl2Element::et: {
      // e + f - i h = i (te + tf - th)
      RadialFn r = te;
      r += tf;
      r += th.scaled(Q(-1));
      return {zero, r};
    }
    case Sl2Element::ht: {
      // -i (e - f) = te - tf
      RadialFn r = te;
      r += tf.scaled(Q(-1));
      return {r, zero};
    }
    case Sl2Element::ft: {
      // (e + f + i h)/4 = i (te + tf + th)/4
      RadialFn r = te;
      r += tf;
      r += th;
      return {zero, r.scaled(Q(1, 4))};
    }
  }
  throw std::logic_error("Sl2Model::apply: unknown element");
}

Sl2Model sl2_model(const Algebra& A, int m) {
  Sl2Model M;
  M.m = m;
  M.s = A.r_lambda() + 2 * m;
  M.mu = A.r_lambda() - 1;
  return M;
}

WeightedFn phi_m(const Algebra& A, int m, const RadialFn& f, const MPoly& h) {
  MPoly tr = trace_poly(A);
  MPoly p(A.dim());
  for (const auto& [pw, v] : f.c) {
    if (sgn(v) == 0) continue;
    if (pw < m) throw std::invalid_argument("phi_m: radial function is singular at the origin");
    p += tr.pow(pw - m) * GQ(v);
  }
  return {p * h, Q(-1)};
}

// ---- folding comparison ----

namespace {

Rule1D gauss_hermite(int n) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Rule1D r;
  for (int i = 0; i < n; ++i) {
    r.x.push_back(es.eigenvalues()[i]);
    double v = es.eigenvectors()(0, i);
    r.w.push_back(std::sqrt(std::numbers::pi) * v * v);
  }
  return r;
}

}  // namespace

cplx classical_segal_bargmann(int k, double c, const std::function<double(const std::vector<double>&)>& poly,
                              const std::vector<cplx>& z, int order) {
  if (static_cast<int>(z.size()) != k) throw std::invalid_argument("classical_segal_bargmann: dimension mismatch");
  if (!(1.0 + c > 0)) throw std::invalid_argument("classical_segal_bargmann: integrand does not decay");
  Rule1D g = gauss_hermite(order);
  double sc = 1.0 / std::sqrt(1.0 + c);
  std::vector<int> idx(k, 0);
  cplx sum = 0;
  std::vector<double> x(k);
  while (true) {
    double w = 1.0;
    cplx zx = 0;
    for (int d = 0; d < k; ++d) {
      x[d] = g.x[idx[d]] * sc;
      w *= g.w[idx[d]];
      zx += z[d] * x[d];
    }
    sum += w * std::exp(2.0 * zx) * poly(x);
    int d = 0;
    while (d < k && ++idx[d] == order) idx[d++] = 0;
    if (d == k) break;
  }
  cplx zz = 0;
  for (const auto& zi : z) zz += zi * zi;
  return std::exp(-zz / 2.0) * std::pow(sc, k) * sum;
}

FoldingReport folding_fit(const std::vector<cplx>& lhs, const std::vector<cplx>& rhs) {
  if (lhs.size() != rhs.size() || lhs.empty()) throw std::invalid_argument("folding_fit: sample mismatch");
  cplx num = 0;
  double den = 0, scale = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    num += std::conj(rhs[i]) * lhs[i];
    den += std::norm(rhs[i]);
    scale = std::max(scale, std::abs(lhs[i]));
  }
  FoldingReport r;
  r.scalar = num / den;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    r.residual = std::max(r.residual, std::abs(lhs[i] - r.scalar * rhs[i]) / scale);
  return r;
}

}  // namespace jf
