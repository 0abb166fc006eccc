/**
 * @file checks.cpp
 * @brief Verification checks: exact identities, closed forms and quadrature cross-checks.
 */
#include "jf/checks.hpp"

#include "jf/harmonics.hpp"
#include "jf/heat.hpp"
#include "jf/linalg.hpp"
#include "jf/orbit.hpp"
#include "jf/parallel.hpp"
#include "jf/poly.hpp"
#include "jf/specialfn.hpp"
#include "jf/transforms.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace jf {

const char* const kToolVersion = "1.0.0";

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skip:
      return "skip";
  }
  return "unknown";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- helpers ----

std::mt19937_64 make_rng(const SuiteConfig& cfg, const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return std::mt19937_64(cfg.seed ^ h);
}

std::string sci(double v, int prec = 3) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

CheckRecord finish(CheckRecord r, double measured, double tol) {
  r.measured = measured;
  r.tolerance = tol;
  r.status = (measured <= tol) ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckRecord exact(CheckRecord r, long failures, long total) {
  r.detail = std::to_string(failures) + " of " + std::to_string(total) + " exact comparisons failed" +
             (r.detail.empty() ? "" : "; " + r.detail);
  return finish(std::move(r), static_cast<double>(failures), 0.0);
}

/// Several components with their own tolerances, reported as the worst error/tolerance ratio.
struct Composite {
  std::vector<std::string> parts;
  double worst = 0;
  void add(const std::string& label, double err, double tol) {
    std::ostringstream os;
    os.precision(3);
    os << label << "=" << err << " (tol " << tol << ")";
    parts.push_back(os.str());
    worst = std::max(worst, tol > 0 ? err / tol : (err > 0 ? kInf : 0.0));
  }
  void add_exact(const std::string& label, long failures, long total) {
    parts.push_back(label + "=" + std::to_string(failures) + "/" + std::to_string(total) + " exact failures");
    if (failures > 0) worst = kInf;
  }
  /// Runs one component; an exception marks it failed with the message.
  template <class F>
  void run(const std::string& label, double tol, F&& f) {
    try {
      add(label, f(), tol);
    } catch (const std::exception& e) {
      parts.push_back(label + " raised: " + e.what());
      worst = kInf;
    }
  }
  void skip(const std::string& label, const std::string& why) { parts.push_back(label + " skipped: " + why); }
  CheckRecord done(CheckRecord r) const {
    std::string d;
    for (const auto& p : parts) d += (d.empty() ? "" : "; ") + p;
    r.detail = d;
    return finish(std::move(r), worst, 1.0);
  }
};

bool zero_on_orbit(const Algebra& A, const MPoly& p) { return normal_form(A, p).is_zero(); }
bool equal_on_orbit(const Algebra& A, const MPoly& p, const MPoly& q) { return zero_on_orbit(A, p - q); }

int default_angular(const Algebra& A) {
  switch (A.kind()) {
    case AlgebraKind::Rank1:
      return 0;
    case AlgebraKind::Minkowski:
      return A.dim() <= 4 ? 20 : (A.dim() == 5 ? 14 : 10);
    case AlgebraKind::SymMat:
      return A.matrix_size() <= 3 ? 16 : 8;
  }
  return 8;
}

int angular_count(const Algebra& A) {
  switch (A.kind()) {
    case AlgebraKind::Rank1:
      return 0;
    case AlgebraKind::Minkowski:
      return A.dim() - 1;
    case AlgebraKind::SymMat:
      return A.matrix_size();
  }
  return 0;
}

Vec<double> random_xi(const Algebra& A, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> U(lo, hi), N(-1.0, 1.0);
  std::vector<double> ang(angular_count(A));
  for (;;) {
    double nrm = 0;
    for (double& a : ang) {
      a = N(rng);
      nrm += a * a;
    }
    if (ang.empty() || nrm > 0.05) break;
  }
  return xi_point(A, U(rng), ang);
}

Vec<cplx> to_cplx(const Vec<double>& x) { return Vec<cplx>(x.begin(), x.end()); }

std::vector<double> real_parts(const std::vector<cplx>& v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].real();
  return r;
}

/// Gaussian-rational point of the complex minimal orbit.
Vec<GQ> rational_xc_point(const Algebra& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> D(-4, 4), P(1, 5);
  auto rq = [&]() -> Q { return Q(D(rng)) / P(rng); };
  GQ c(rq() + Q(1, 7), rq());
  switch (A.kind()) {
    case AlgebraKind::Rank1:
      return {c};
    case AlgebraKind::Minkowski: {
      // c (1, omega) with omega on the unit sphere by inverse stereographic projection.
      int n = A.dim();
      std::vector<Q> w(n - 2);
      Q w2 = 0;
      for (auto& x : w) {
        x = rq();
        w2 += x * x;
      }
      Vec<GQ> z(n);
      z[0] = c;
      for (int j = 0; j < n - 2; ++j) z[j + 1] = c * GQ(Q(2 * w[j] / (w2 + 1)));
      z[n - 1] = c * GQ(Q((w2 - 1) / (w2 + 1)));
      return z;
    }
    case AlgebraKind::SymMat: {
      int k = A.matrix_size();
      std::vector<GQ> v(k);
      for (auto& x : v) x = GQ(rq(), rq());
      v[0] += GQ(1);
      Vec<GQ> z(A.dim(), GQ(0));
      for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) z[A.sym_index(i, j)] = v[i] * v[j];
      return z;
    }
  }
  throw std::logic_error("rational_xc_point: unknown algebra");
}

MPoly random_homogeneous(int nvars, int deg, std::mt19937_64& rng, bool complex_coeffs = false) {
  std::uniform_int_distribution<int> D(-3, 3);
  MPoly p(nvars);
  Mono first;
  for (const auto& a : multi_indices(nvars, deg)) {
    int s = 0;
    for (int e : a) s += e;
    if (s != deg) continue;
    if (first.empty()) first = a;
    GQ c(Q(D(rng)), complex_coeffs ? Q(D(rng)) : Q(0));
    p.add_term(a, c);
  }
  if (p.is_zero()) p.add_term(first, GQ(1));
  return p;
}

Mono unit_index(int n, int j) {
  Mono a(n, 0);
  a[j] = 1;
  return a;
}

int total_degree(const Mono& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

// ---- special functions ----

CheckRecord check_specialfn_identities(const CheckContext& c, CheckRecord r) {
  const double s = c.cfg.tol_scale;
  const double lam = c.A.lambda_d();
  Composite comp;

  // ODE t u'' + lambda u' - u = 0 with 5-point differences.
  double ode = 0;
  for (int kind = 0; kind < 2; ++kind) {
    auto u = [&](double t) {
      return kind == 0 ? bessel_tilde_sq(BesselKind::I, lam - 1, t).real() : k_tilde(lam - 1, 2.0 * std::sqrt(t));
    };
    for (int i = 0; i < 40; ++i) {
      double t = 0.1 * std::pow(200.0, i / 39.0);
      double h = 0.01 * t;
      double um2 = u(t - 2 * h), um1 = u(t - h), u0 = u(t), up1 = u(t + h), up2 = u(t + 2 * h);
      double d1 = (um2 - 8 * um1 + 8 * up1 - up2) / (12 * h);
      double d2 = (-um2 + 16 * um1 - 30 * u0 + 16 * up1 - up2) / (12 * h * h);
      double scale = std::max({std::abs(u0), std::abs(t * d2), std::abs(lam * d1)});
      ode = std::max(ode, std::abs(t * d2 + lam * d1 - u0) / scale);
    }
  }
  comp.add("ode_residual", ode, 1e-6 * s);

  // K-Bessel moment against adaptive quadrature.
  double mom = 0;
  boost::math::quadrature::exp_sinh<double> integrator;
  std::vector<double> alphas = {lam - 1, -0.5, 0.25, 1.0};
  std::vector<double> betas = {2 * c.A.r_lambda_d() - 1, 0.5, 2.0, 3.5};
  int moments = 0;
  for (double al : alphas)
    for (double be : betas)
      for (double a : {1.0, 2.0}) {
        if (be + 1 < 0.5 || be - 2 * al + 1 < 0.5) continue;
        // Below 1e-100 and above 1e3 the integrand is negligible and k_tilde leaves double range.
        double num = integrator.integrate(
            [&](double x) { return (x < 1e-100 || x > 1e3) ? 0.0 : k_tilde(al, a * x) * std::pow(x, be); }, 1e-13);
        double ref = k_bessel_moment(al, be, a);
        mom = std::max(mom, std::abs(num - ref) / std::abs(ref));
        ++moments;
      }
  comp.add("k_moment(" + std::to_string(moments) + " cases)", mom, 1e-8 * s);

  // 2F1(-n, b; 1/2; z^2) = K C_{2n}^{b-n}(z) at rational points.
  long gfail = 0, gtotal = 0, variant_fail = 0;
  for (long n = 0; n <= 4; ++n)
    for (const Q& b : {Q(7, 3), Q(-5, 3), Q(13, 4)})
      for (const Q& z : {Q(1, 3), Q(-2, 5), Q(3, 7), Q(2)}) {
        Q lhs = hyp2f1_terminating<Q>(n, b, Q(1, 2), Q(z * z));
        Q rhs = gegenbauer_chain_constant(n, b) * gegenbauer<Q>(2 * n, Q(b - n), z);
        ++gtotal;
        if (lhs != rhs) ++gfail;
        // Variant with length-n Pochhammer factors in the constant.
        Q k2 = factorial_q(2 * n) * pochhammer(Q(b - n + Q(1, 2)), n) /
               (pochhammer(Q(1, 2), n) * pochhammer(Q(2 * b - 2 * n), n) * pochhammer(Q(b + Q(1, 2)), n));
        if (n % 2) k2 = -k2;
        if (lhs != k2 * gegenbauer<Q>(2 * n, Q(b - n), z)) ++variant_fail;
      }
  comp.add_exact("gegenbauer_identity", gfail, gtotal);
  comp.parts.push_back("length-n Pochhammer variant fails at " + std::to_string(variant_fail) + " of " +
                       std::to_string(gtotal) + " points");

  // c_{r,lambda} from the moment formula with alpha = lambda - 1, beta = 2 r lambda - 1.
  GammaProduct lhs = fock_normalization_symbolic(c.A.rank(), c.A.lambda());
  GammaProduct rhs = k_bessel_moment_symbolic(Q(c.A.lambda() - 1), Q(2 * c.A.r_lambda() - 1));
  comp.add_exact("fock_constant " + lhs.str(), lhs == rhs ? 0 : 1, 1);
  return comp.done(std::move(r));
}

CheckRecord check_bessel_relations(const CheckContext& c, CheckRecord r) {
  const double lam = c.A.lambda_d();
  double rel = 0;
  long bitfail = 0, total = 0;
  for (double al : {lam - 1, -0.5, 0.0, 0.5, 1.5})
    for (double z : {0.3, 1.0, 2.5, 6.0, 11.0}) {
      cplx jv = bessel_tilde(BesselKind::J, al, cplx(0, z));
      cplx iv = bessel_tilde(BesselKind::I, al, cplx(z, 0));
      rel = std::max(rel, std::abs(jv - iv) / std::abs(iv));
      total += 3;
      if (bessel_tilde(BesselKind::I, al, cplx(-z, 0)) != iv) ++bitfail;
      if (bessel_tilde(BesselKind::J, al, cplx(-z, 0)) != bessel_tilde(BesselKind::J, al, cplx(z, 0))) ++bitfail;
      cplx f = kernel_F(c.A.r_lambda_d(), lam, cplx(z, 0));
      cplx b = std::pow(2.0, -c.A.r_lambda_d()) * kernel_B(lam, cplx(-z, 0));
      if (f != b) ++bitfail;
    }
  r.detail = "max |J~(iz) - I~(z)|/|I~(z)| = " + sci(rel) + "; bitwise evenness/kernel-F failures " +
             std::to_string(bitfail) + " of " + std::to_string(total);
  return finish(std::move(r), bitfail ? kInf : rel, c.tol);
}

// ---- Jordan algebra ----

CheckRecord check_jordan_identities(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  auto rng = make_rng(c.cfg, r.name);
  std::uniform_int_distribution<int> D(-5, 5), P(1, 4);
  auto rv = [&] {
    Vec<Q> v(A.dim());
    for (auto& x : v) x = Q(D(rng), P(rng));
    for (auto& x : v) x.canonicalize();
    return v;
  };
  long fail = 0, total = 0;
  for (int s = 0; s < 10; ++s) {
    Vec<Q> x = rv(), y = rv(), z = rv();
    Vec<Q> x2 = A.product(x, x);
    ++total;
    if (A.product(x2, A.product(x, y)) != A.product(x, A.product(x2, y))) ++fail;
    ++total;
    if (A.trace_form(A.product(x, y), z) != A.trace_form(y, A.product(x, z))) ++fail;
  }
  auto frame = A.jordan_frame();
  Vec<Q> sum(A.dim(), Q(0));
  for (const auto& ci : frame)
    for (int a = 0; a < A.dim(); ++a) sum[a] += ci[a];
  ++total;
  if (sum != A.unit()) ++fail;
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t j = 0; j < frame.size(); ++j) {
      ++total;
      Vec<Q> p = A.product(frame[i], frame[j]);
      Vec<Q> expect = (i == j) ? frame[i] : Vec<Q>(A.dim(), Q(0));
      if (p != expect) ++fail;
    }
  if (A.rank() >= 2) {
    Vec<Q> x0 = A.offdiag_unit();
    Vec<Q> half = x0;
    for (auto& v : half) v /= 2;
    ++total;
    if (A.product(frame[0], x0) != half) ++fail;
    ++total;
    if (A.trace_form(x0, x0) != Q(2)) ++fail;
  }
  return exact(std::move(r), fail, total);
}

CheckRecord check_so2n(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  const int n = A.dim();
  BesselOp B(A);
  long fail = 0, total = 0, eps_fail = 0;
  for (const auto& a : multi_indices(n, std::min(c.cfg.max_degree, 4))) {
    MPoly f = MPoly::monomial(a);
    MPoly box(n);
    for (int i = 0; i < n; ++i) {
      MPoly d2 = f.diff(i).diff(i);
      box += (i == 0) ? d2 : -d2;
    }
    for (int i = 0; i < n; ++i) {
      GQ eps(i == 0 ? 1 : -1);
      MPoly di = f.diff(i);
      MPoly Bi = MPoly::variable(n, i) * box * eps - (euler_apply(di) * GQ(2) + di * GQ(Q(n - 2)));
      MPoly mine = B.coord(i, f);
      ++total;
      if (!(mine == Bi * GQ(Q(-1, 4)))) ++fail;
      if (!(mine == Bi * eps * GQ(Q(-1, 4)))) ++eps_fail;
    }
  }
  long dfail = 0, dtotal = 0;
  for (int m = 0; m <= std::min(c.cfg.max_degree, 4); ++m) {
    Q dm = dim_orbit_polys(A, m);
    long count = static_cast<long>(orbit_monomials(A, m).size());
    long classical = classical_harmonic_dim(n, m);
    dtotal += 2;
    if (dm != Q(classical)) ++dfail;
    if (count != classical) ++dfail;
  }
  r.detail = "components with the extra sign factor on B_i differ in " + std::to_string(eps_fail) + " of " +
             std::to_string(total) + " cases; dimension identity failures " + std::to_string(dfail) + " of " +
             std::to_string(dtotal);
  return exact(std::move(r), fail + dfail, total + dtotal);
}

// ---- polynomial layer ----

CheckRecord check_bessel_commuting(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  auto rng = make_rng(c.cfg, r.name);
  long fail = 0, total = 0;
  for (int deg = 2; deg <= std::min(c.cfg.max_degree, 4); ++deg) {
    MPoly p = random_homogeneous(A.dim(), deg, rng, true);
    for (int a = 0; a < A.dim(); ++a)
      for (int b = a + 1; b < A.dim(); ++b) {
        ++total;
        if (!equal_on_orbit(A, B.coord(a, B.coord(b, p)), B.coord(b, B.coord(a, p)))) ++fail;
      }
  }
  return exact(std::move(r), fail, total);
}

CheckRecord check_bessel_degree(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  auto rng = make_rng(c.cfg, r.name);
  long fail = 0, total = 0;
  for (int deg = 1; deg <= c.cfg.max_degree; ++deg) {
    MPoly p = random_homogeneous(A.dim(), deg, rng);
    for (int j = 0; j < A.dim(); ++j) {
      MPoly q = B.coord(j, p);
      ++total;
      if (!q.is_zero() && !(q.is_homogeneous() && q.degree() == deg - 1)) ++fail;
    }
  }
  return exact(std::move(r), fail, total);
}

CheckRecord check_fischer_adjoint(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  auto rng = make_rng(c.cfg, r.name);
  long fail = 0, total = 0;
  std::uniform_int_distribution<int> D(-3, 3);
  for (int m = 0; m < std::min(c.cfg.max_degree, 3); ++m) {
    MPoly p = random_homogeneous(A.dim(), m, rng, true);
    MPoly q = random_homogeneous(A.dim(), m + 1, rng, true);
    Vec<GQ> a(A.dim());
    for (auto& x : a) x = GQ(Q(D(rng)), Q(D(rng)));
    // [(a|z/4) p, q] = [p, (conj a|B) q]
    MPoly lhs_poly = pairing_poly(A, a) * p * GQ(Q(1, 4));
    Vec<GQ> ab(A.dim());
    for (int i = 0; i < A.dim(); ++i) ab[i] = a[i].conj();
    ++total;
    if (!(fischer_inner(B, lhs_poly, q) == fischer_inner(B, p, B.pair(ab, q)))) ++fail;
  }
  return exact(std::move(r), fail, total);
}

CheckRecord check_fischer_ideal(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  auto rng = make_rng(c.cfg, r.name);
  int n = A.dim();
  MPoly g = MPoly::variable(n, 0) * MPoly::variable(n, 0);
  for (int j = 1; j < n; ++j) g -= MPoly::variable(n, j) * MPoly::variable(n, j);
  long fail = 0, total = 0;
  for (int m = 2; m <= std::min(c.cfg.max_degree, 4); ++m) {
    MPoly p = random_homogeneous(n, m, rng, true);
    MPoly q = random_homogeneous(n, m - 2, rng, true);
    ++total;
    if (!zero_on_orbit(A, g)) ++fail;
    if (!fischer_inner(B, p, g * q).is_zero()) ++fail;
  }
  return exact(std::move(r), fail, total);
}

CheckRecord check_bessel_trace_action(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  Vec<GQ> e = Algebra::cast<GQ>(A.unit());
  MPoly tr = trace_poly(A);
  long fail = 0, total = 0;
  for (int m = 0; m <= std::min(c.cfg.max_degree, 3); ++m) {
    for (const auto& p : harmonic_basis(B, m).basis) {
      WeightedFn out = weighted_bessel_pair(B, e, WeightedFn{p, Q(-1)});
      MPoly expect = (tr - MPoly::constant(A.dim(), GQ(Q(A.r_lambda() + 2 * m)))) * p;
      ++total;
      if (out.s != Q(-1) || !equal_on_orbit(A, out.p, expect)) ++fail;
    }
  }
  // Product rule on tr^k p: B_e(tr^k p) = tr^k B_e p + k (r lambda + 2m + k - 1) tr^{k-1} p for p of degree m.
  auto rng = make_rng(c.cfg, r.name);
  for (int m = 0; m <= 2; ++m)
    for (int k = 1; k <= 2; ++k) {
      MPoly p = random_homogeneous(A.dim(), m, rng);
      MPoly lhs = B.trace_part(tr.pow(k) * p);
      MPoly rhs = tr.pow(k) * B.trace_part(p) + tr.pow(k - 1) * p * GQ(Q(k * (A.r_lambda() + 2 * m + k - 1)));
      ++total;
      if (!equal_on_orbit(A, lhs, rhs)) ++fail;
    }
  return exact(std::move(r), fail, total);
}

CheckRecord check_normal_form(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  auto rng = make_rng(c.cfg, r.name);
  long fail = 0, total = 0;
  for (int deg = 1; deg <= c.cfg.max_degree; ++deg) {
    MPoly p = random_homogeneous(A.dim(), deg, rng, true);
    MPoly nf = normal_form(A, p);
    MPoly back = lift_normal_form(A, nf);
    for (int s = 0; s < 4; ++s) {
      Vec<GQ> z = rational_xc_point(A, rng);
      ++total;
      if (!A.in_min_orbit(z)) ++fail;
      ++total;
      if (!(back.eval(z) == p.eval(z))) ++fail;
    }
    ++total;
    if (!(normal_form(A, back) == nf)) ++fail;
  }
  return exact(std::move(r), fail, total);
}

CheckRecord check_reproducing_exact(const CheckContext& c, CheckRecord r) {
  // [p, K^m(., w)] = p(w) with K^m(z,w) = (z|conj w)^m / (4^m m! (lambda)_m).
  const Algebra& A = c.A;
  BesselOp B(A);
  auto rng = make_rng(c.cfg, r.name);
  long fail = 0, total = 0;
  for (int m = 0; m <= std::min(c.cfg.max_degree, 3); ++m) {
    Vec<GQ> w = rational_xc_point(A, rng);
    Vec<GQ> wb(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) wb[i] = w[i].conj();
    MPoly K = pairing_poly(A, wb).pow(m) *
              GQ(Q(1) / (qpow(Q(4), m) * factorial_q(m) * pochhammer(A.lambda(), m)));
    MPoly p = random_homogeneous(A.dim(), m, rng, true);
    ++total;
    if (!(fischer_inner(B, p, K) == p.eval(w))) ++fail;
  }
  return exact(std::move(r), fail, total);
}

// ---- orbit and quadrature ----

CheckRecord check_orbit_normalization(const CheckContext& c, CheckRecord r) {
  int R = c.cfg.radial_order ? c.cfg.radial_order : 20;
  int G = c.cfg.angular_order ? c.cfg.angular_order : 8;
  Quadrature q = xi_quadrature(c.A, R, G, 2.0);
  double s = q.integrate([&](const Vec<double>& x) { return std::exp(-2.0 * c.A.trace(x)); });
  r.detail = "||psi_0||^2 = " + sci(s, 17) + " with " + std::to_string(q.size()) + " nodes";
  r.expected = 1.0;
  return finish(std::move(r), std::abs(s - 1.0), c.tol);
}

CheckRecord check_orbit_rules(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  int G = c.cfg.angular_order ? c.cfg.angular_order : 8;
  Composite comp;
  Quadrature q = xi_quadrature(A, 20, G, 2.0);
  long off = 0;
  for (const auto& x : q.nodes)
    if (!A.in_xi(x, 1e-12)) ++off;
  comp.add_exact("nodes_on_orbit", off, static_cast<long>(q.size()));

  // int f(cx) d mu = c^{-r lambda} int f d mu with f = e^{-tr}(1 + (x|c1)^2).
  Vec<double> c1 = Algebra::cast<double>(A.jordan_frame()[0]);
  auto f = [&](const Vec<double>& x) {
    double v = A.trace_form(x, c1);
    return std::exp(-A.trace(x)) * (1.0 + v * v);
  };
  Quadrature q1 = xi_quadrature(A, 20, G, 1.0);
  double base = q1.integrate(f);
  double dil = 0;
  for (double cs : {0.5, 1.7, 3.0}) {
    Quadrature qc = xi_quadrature(A, 20, G, cs);
    double v = qc.integrate([&](const Vec<double>& x) {
      Vec<double> y = x;
      for (double& t : y) t *= cs;
      return f(y);
    });
    dil = std::max(dil, std::abs(v * std::pow(cs, A.r_lambda_d()) - base) / std::abs(base));
  }
  comp.add("dilation", dil, 1e-8 * c.cfg.tol_scale);

  if (A.kind() == AlgebraKind::SymMat) {
    // int_Xi F d mu = (2/pi)^{k/2} int_{R^k} F(v v^t) dv for F = e^{-2 tr} (1 + (x|c1)^2).
    int k = A.matrix_size();
    double lhs = q.integrate([&](const Vec<double>& x) {
      double v = A.trace_form(x, c1);
      return std::exp(-2.0 * A.trace(x)) * (1.0 + v * v);
    });
    cplx rhs = classical_segal_bargmann(
        k, 1.0,
        [&](const std::vector<double>& v) {
          Vec<double> x = folding_map(A, v);
          double t = A.trace_form(x, c1);
          return 1.0 + t * t;
        },
        std::vector<cplx>(k, 0.0), 12);
    double fold = std::abs(std::pow(2.0 / std::numbers::pi, k / 2.0) * rhs.real() - lhs) / lhs;
    comp.add("folding_isometry", fold, 1e-8 * c.cfg.tol_scale);
  }
  return comp.done(std::move(r));
}

// ---- harmonics ----

CheckRecord check_harmonics(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  auto rng = make_rng(c.cfg, r.name);
  long fail = 0, total = 0;
  std::ostringstream dims;
  MPoly tr = trace_poly(A);
  for (int m = 0; m <= c.cfg.max_degree; ++m) {
    HarmonicBasis H = harmonic_basis(B, m);
    ++total;
    if (Q(static_cast<long>(H.basis.size())) != dim_harmonic(A, m)) ++fail;
    dims << (m ? "," : "") << H.basis.size();
    for (const auto& h : H.basis) {
      ++total;
      if (!zero_on_orbit(A, B.trace_part(h))) ++fail;
    }
    // Decomposition of a random homogeneous polynomial.
    MPoly p = random_homogeneous(A.dim(), m, rng, true);
    auto parts = harmonic_decompose(B, p);
    MPoly sum(A.dim());
    for (int k = 0; k <= m; ++k) {
      ++total;
      if (!zero_on_orbit(A, B.trace_part(parts[k]))) ++fail;
      sum += tr.pow(k) * parts[k];
    }
    ++total;
    if (!equal_on_orbit(A, sum, p)) ++fail;
    if (A.rank() >= 2) {
      MPoly sph = spherical_vector(A, m);
      MPoly hw = highest_weight_vector(A, m);
      total += 3;
      if (!zero_on_orbit(A, B.trace_part(sph))) ++fail;
      if (!zero_on_orbit(A, B.trace_part(hw))) ++fail;
      MPoly w = derivation_apply(x0_derivation(A), hw);
      if (!equal_on_orbit(A, w, hw * GQ(Q(0), Q(m) / 2))) ++fail;
    }
  }
  r.detail = "dim H^m = " + dims.str() + (A.rank() < 2 ? "; spherical/highest-weight vectors need rank >= 2" : "");
  return exact(std::move(r), fail, total);
}

CheckRecord check_harmonic_orthogonality(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  MPoly tr = trace_poly(A);
  long fail = 0, total = 0;
  int top = std::min(c.cfg.max_degree, 3);
  std::vector<HarmonicBasis> H;
  for (int m = 0; m <= top; ++m) H.push_back(harmonic_basis(B, m));
  for (int m = 0; m <= top; ++m) {
    // Completeness: tr^k H^{m-k} spans P^m(X).
    Mat<GQ> rows;
    std::vector<std::pair<int, MPoly>> comps;
    for (int k = 0; k <= m; ++k)
      for (const auto& h : H[m - k].basis) {
        MPoly v = tr.pow(k) * h;
        rows.push_back(orbit_coordinates(A, v, m));
        comps.emplace_back(k, v);
      }
    long dm = static_cast<long>(orbit_monomials(A, m).size());
    total += 2;
    if (static_cast<long>(rows.size()) != dm) ++fail;
    if (exact_rank(rows) != dm) ++fail;
    // Fischer orthogonality between different k.
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        if (comps[i].first == comps[j].first) continue;
        ++total;
        if (!fischer_inner(B, comps[i].second, comps[j].second).is_zero()) ++fail;
      }
  }
  return exact(std::move(r), fail, total);
}

// ---- Fock space (rank one) ----

CheckRecord check_fock_bessel_fischer(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  Composite comp;
  int top = std::max(4, c.cfg.max_degree);
  long fail = 0;
  for (int m = 0; m <= top; ++m) {
    GQ v = fischer_inner(B, MPoly::monomial({m}), MPoly::monomial({m}));
    if (!(v == GQ(qpow(Q(4), m) * factorial_q(m) * pochhammer(A.lambda(), m)))) ++fail;
  }
  comp.add_exact("fischer_norms", fail, top + 1);
  FockQuadrature fq = fock_quadrature_rank1(A.lambda_d(), 32);
  double worst = 0;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      cplx g = 0;
      for (std::size_t k = 0; k < fq.size(); ++k)
        g += fq.weights[k] * std::pow(fq.nodes[k], i) * std::conj(std::pow(fq.nodes[k], j));
      double f = fischer_inner(B, MPoly::monomial({i}), MPoly::monomial({j})).re.get_d();
      double fi = std::pow(4.0, i) * std::tgamma(i + 1.0) * pochhammer_d(A.lambda_d(), i);
      double fj = std::pow(4.0, j) * std::tgamma(j + 1.0) * pochhammer_d(A.lambda_d(), j);
      worst = std::max(worst, std::abs(g - f) / std::sqrt(fi * fj));
    }
  comp.add("gram_relative", worst, 1e-8 * c.cfg.tol_scale);
  return comp.done(std::move(r));
}

CheckRecord check_fock_reproducing(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  auto rng = make_rng(c.cfg, r.name);
  FockQuadrature fq = fock_quadrature_rank1(A.lambda_d(), 32, 50.0);
  std::uniform_real_distribution<double> M(0.5, 1.5), Th(0, 2 * std::numbers::pi);
  Composite comp;
  double rep = 0;
  long bound_fail = 0;
  for (int s = 0; s < 8; ++s) {
    cplx w = std::polar(M(rng), Th(rng));
    for (int m = 0; m <= 3; ++m) {
      cplx v = 0;
      for (std::size_t k = 0; k < fq.size(); ++k)
        v += fq.weights[k] * std::pow(fq.nodes[k], m) * std::conj(repro_kernel(A, {fq.nodes[k]}, {w}));
      cplx ex = std::pow(w, m);
      rep = std::max(rep, std::abs(v - ex) / std::abs(ex));
      // |p(w)| <= K(w,w)^{1/2} ||p|| with ||z^m||^2 = 4^m m! (lambda)_m.
      double nrm = std::sqrt(std::pow(4.0, m) * std::tgamma(m + 1.0) * pochhammer_d(A.lambda_d(), m));
      if (std::abs(ex) > std::sqrt(repro_kernel(A, {w}, {w}).real()) * nrm * (1 + 1e-12)) ++bound_fail;
    }
  }
  comp.add("reproducing", rep, 1e-6 * c.cfg.tol_scale);
  comp.add_exact("pointwise_bound", bound_fail, 32);
  return comp.done(std::move(r));
}

CheckRecord check_fock_inverse(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  FockQuadrature fq = fock_quadrature_rank1(A.lambda_d(), 48, 50.0);
  double worst = 0;
  for (int m = 0; m <= 2; ++m) {
    WeightedFn h = hermite_function(B, {m});
    std::vector<double> xs = {0.1, 0.5, 1.0, 2.0, 4.0, 7.0};
    double scale = 0;
    std::vector<cplx> num, ex;
    for (double x : xs) {
      num.push_back(inverse_segal_bargmann_rank1(A, fq, [m](cplx z) { return std::pow(z, m); }, x));
      ex.push_back(h.p.eval(std::vector<cplx>{x}) * std::exp(h.s.get_d() * x));
      scale = std::max(scale, std::abs(ex.back()));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(num[i] - ex[i]) / scale);
  }
  r.detail = "inverse transform of z^m against h_m, m <= 2, relative to sup over samples";
  return finish(std::move(r), worst, c.tol);
}

CheckRecord check_hermite_laguerre(const CheckContext& c, CheckRecord r) {
  // Rank one: h_k(x) = (-2)^k k! L_k^{lambda-1}(2x) e^{-x}.
  const Algebra& A = c.A;
  BesselOp B(A);
  long fail = 0;
  int top = std::max(6, c.cfg.max_degree);
  for (int k = 0; k <= top; ++k) {
    WeightedFn h = hermite_function(B, {k});
    MPoly L(1);
    for (int j = 0; j <= k; ++j) {
      Q cj = pochhammer(Q(A.lambda() + j), k - j) / factorial_q(k - j) / factorial_q(j) * qpow(Q(-2), j);
      L.add_term({j}, GQ(cj));
    }
    L = L * GQ(qpow(Q(-2), k) * factorial_q(k));
    if (h.s != Q(-1) || !(h.p == L)) ++fail;
  }
  return exact(std::move(r), fail, top + 1);
}

// ---- Segal-Bargmann transform ----

CheckRecord check_sb_hermite(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  HermiteBasis hb(B);
  int R = c.cfg.radial_order ? c.cfg.radial_order : (A.kind() == AlgebraKind::Rank1 ? 30 : 20);
  int G = c.cfg.angular_order ? c.cfg.angular_order : default_angular(A);
  Quadrature q = xi_quadrature(A, R, G, 2.0);
  auto al = multi_indices(A.dim(), c.cfg.max_degree);
  std::vector<std::vector<cplx>> fv(al.size());
  parallel_for(al.size(), [&](std::size_t i) { fv[i] = sample(q, hb.get(al[i]), A); });
  auto rng = make_rng(c.cfg, r.name);
  std::vector<Vec<cplx>> zs;
  for (int i = 0; i < 20; ++i) zs.push_back(random_xc_point(A, rng, 1.0));
  std::vector<double> err(zs.size(), 0.0);
  parallel_for(zs.size(), [&](std::size_t k) {
    auto num = segal_bargmann_numeric(A, q, fv, zs[k]);
    for (std::size_t i = 0; i < al.size(); ++i) {
      cplx ex = MPoly::monomial(al[i]).eval(zs[k]);
      err[k] = std::max(err[k], std::abs(num[i] - ex) / std::abs(ex));
    }
  });
  r.detail = std::to_string(al.size()) + " Hermite functions at 20 points, " + std::to_string(q.size()) + " nodes";
  return finish(std::move(r), *std::max_element(err.begin(), err.end()), c.tol);
}

CheckRecord check_sb_unitarity(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  HermiteBasis hb(B);
  int deg = std::min(c.cfg.max_degree, 3);
  Quadrature q = xi_quadrature(A, 8, 8, 2.0);
  auto al = multi_indices(A.dim(), deg);
  std::vector<std::vector<cplx>> fv(al.size());
  for (std::size_t i = 0; i < al.size(); ++i) fv[i] = sample(q, hb.get(al[i]), A);
  std::size_t N = al.size();
  std::vector<double> F(N * N);
  parallel_for(N, [&](std::size_t i) {
    for (std::size_t j = 0; j < N; ++j)
      F[i * N + j] = fischer_inner(B, MPoly::monomial(al[i]), MPoly::monomial(al[j])).re.get_d();
  });
  double worst = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      cplx g = 0;
      for (std::size_t k = 0; k < q.size(); ++k) g += fv[i][k] * std::conj(fv[j][k]) * q.weights[k];
      worst = std::max(worst, std::abs(g - F[i * N + j]) / std::sqrt(F[i * N + i] * F[j * N + j]));
    }
  r.detail = std::to_string(N) + "x" + std::to_string(N) + " Gram matrices, " + std::to_string(q.size()) + " nodes";
  return finish(std::move(r), worst, c.tol);
}

CheckRecord check_sb_exact_path(const CheckContext& c, CheckRecord r) {
  // P e^{-tr} expanded in Hermite functions; exact transform vs quadrature.
  const Algebra& A = c.A;
  BesselOp B(A);
  HermiteBasis hb(B);
  auto rng = make_rng(c.cfg, r.name);
  int G = c.cfg.angular_order ? c.cfg.angular_order : default_angular(A);
  Quadrature q = xi_quadrature(A, 20, G, 2.0);
  double worst = 0;
  for (int deg = 0; deg <= std::min(c.cfg.max_degree, 2); ++deg) {
    MPoly P = random_homogeneous(A.dim(), deg, rng) + MPoly::constant(A.dim(), GQ(1));
    MPoly F = segal_bargmann_exact(A, hb.expand(P));
    MPoly Fl = lift_normal_form(A, F);
    auto fv = sample(q, WeightedFn{P, Q(-1)}, A);
    std::vector<cplx> num, ex;
    double scale = 0;
    for (int s = 0; s < 6; ++s) {
      Vec<cplx> z = random_xc_point(A, rng, 1.0);
      num.push_back(segal_bargmann_numeric(A, q, fv, z));
      ex.push_back(Fl.eval(z));
      scale = std::max(scale, std::abs(ex.back()));
    }
    for (std::size_t i = 0; i < num.size(); ++i) worst = std::max(worst, std::abs(num[i] - ex[i]) / scale);
  }
  return finish(std::move(r), worst, c.tol);
}

CheckRecord check_pointwise_bound(const CheckContext& c, CheckRecord r) {
  // |F(z)| <= K(z,z)^{1/2} ||F|| for polynomials with Fischer norms.
  const Algebra& A = c.A;
  BesselOp B(A);
  auto rng = make_rng(c.cfg, r.name);
  long fail = 0, total = 0;
  double tightest = 0;
  for (int deg = 0; deg <= std::min(c.cfg.max_degree, 3); ++deg) {
    MPoly p = random_homogeneous(A.dim(), deg, rng, true);
    double nrm = std::sqrt(fischer_inner(B, p, p).re.get_d());
    for (int s = 0; s < 5; ++s) {
      Vec<cplx> z = random_xc_point(A, rng, 0.5 + s);
      double bound = std::sqrt(repro_kernel(A, z, z).real()) * nrm;
      double v = std::abs(normal_form(A, p).is_zero() ? cplx(0) : p.eval(z));
      ++total;
      tightest = std::max(tightest, v / bound);
      if (v > bound * (1 + 1e-12)) ++fail;
    }
  }
  r.detail = "max |F(z)| / (K(z,z)^{1/2} ||F||) = " + sci(tightest);
  return exact(std::move(r), fail, total);
}

CheckRecord check_kernel_series(const CheckContext& c, CheckRecord r) {
  // K(z,w) = sum_m K^m(z,w).
  const Algebra& A = c.A;
  auto rng = make_rng(c.cfg, r.name);
  double worst = 0;
  for (int s = 0; s < 10; ++s) {
    Vec<cplx> z = random_xc_point(A, rng, 1.0 + s), w = random_xc_point(A, rng, 1.0);
    cplx k = repro_kernel(A, z, w), sum = 0;
    for (int m = 0; m < 80; ++m) sum += repro_kernel_m(A, m, z, w);
    worst = std::max(worst, std::abs(k - sum) / std::abs(k));
  }
  return finish(std::move(r), worst, c.tol);
}

// ---- unitary inversion ----

struct InversionOrders {
  int R, G, inner_R, inner_G, outer_R, outer_G;
};

InversionOrders inversion_orders(const Algebra& A) {
  switch (A.kind()) {
    case AlgebraKind::Rank1:
      return {40, 0, 80, 0, 24, 0};
    case AlgebraKind::Minkowski:
      return {30, A.dim() == 3 ? 30 : 16, 60, 50, 16, 16};
    case AlgebraKind::SymMat:
      return {30, 20, 60, 40, 12, 12};
  }
  return {30, 10, 60, 40, 12, 12};
}

CheckRecord check_inversion(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  HermiteBasis hb(B);
  InversionOrders o = inversion_orders(A);
  if (c.cfg.radial_order) o.R = c.cfg.radial_order;
  if (c.cfg.angular_order) o.G = c.cfg.angular_order;
  Quadrature q = xi_quadrature(A, o.R, o.G, 1.0);
  auto rng = make_rng(c.cfg, r.name);
  std::vector<Vec<double>> xs;
  for (int i = 0; i < 10; ++i) xs.push_back(random_xi(A, rng, 0.1, 4.0));
  const double tol = 1e-6 * c.cfg.tol_scale;
  Composite comp;

  // Every test function with its expected eigenvalue, transformed in one batched pass.
  std::vector<WeightedFn> fns;
  std::vector<double> signs;
  std::vector<int> group;  // 0 psi0_fixed, 1 hermite_parity, 2 bochner
  auto push = [&](WeightedFn f, double sign, int g) {
    fns.push_back(std::move(f));
    signs.push_back(sign);
    group.push_back(g);
  };
  push(hb.get(Mono(A.dim(), 0)), 1.0, 0);
  for (const auto& a : multi_indices(A.dim(), std::min(c.cfg.max_degree, 3)))
    push(hb.get(a), total_degree(a) % 2 ? -1.0 : 1.0, 1);
  for (int m = 0; m <= 3; ++m)
    for (const auto& p : harmonic_basis(B, m).basis) push(WeightedFn{p, Q(-1)}, m % 2 ? -1.0 : 1.0, 2);
  std::vector<std::vector<cplx>> fv(fns.size());
  parallel_for(fns.size(), [&](std::size_t i) { fv[i] = sample(q, fns[i], A); });
  std::vector<std::vector<cplx>> num(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { num[i] = unitary_inversion_numeric(A, q, fv, xs[i]); });
  double worst[3] = {0, 0, 0};
  for (std::size_t f = 0; f < fns.size(); ++f) {
    std::vector<cplx> ex(xs.size());
    double scale = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ex[i] = signs[f] * fns[f].p.eval(to_cplx(xs[i])) * std::exp(fns[f].s.get_d() * A.trace(xs[i]));
      scale = std::max(scale, std::abs(ex[i]));
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
      worst[group[f]] = std::max(worst[group[f]], std::abs(num[i][f] - ex[i]) / scale);
  }
  comp.add("psi0_fixed", worst[0], tol);
  comp.add("hermite_parity", worst[1], tol);
  comp.add("bochner", worst[2], tol);

  if (A.dim() <= 3) {
    // F applied twice to g = psi_0 + h_{e_0}/2, inner rule fine, outer rule coarse.
    Quadrature qi = xi_quadrature(A, o.inner_R, o.inner_G, 1.0);
    Quadrature qo = xi_quadrature(A, o.outer_R, o.outer_G, 1.0);
    WeightedFn h0 = hb.get(Mono(A.dim(), 0)), h1 = hb.get(unit_index(A.dim(), 0));
    auto g0 = sample(qi, h0, A), g1 = sample(qi, h1, A);
    std::vector<cplx> g(qi.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = g0[i] + 0.5 * g1[i];
    std::vector<cplx> Fg(qo.size());
    parallel_for(qo.size(), [&](std::size_t i) { Fg[i] = unitary_inversion_numeric(A, qi, g, qo.nodes[i]); });
    double scale = 0, e = 0;
    std::vector<cplx> num(xs.size()), ex(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      num[i] = unitary_inversion_numeric(A, qo, Fg, xs[i]);
      ex[i] = std::exp(-A.trace(xs[i])) * (1.0 + 0.5 * h1.p.eval(to_cplx(xs[i])));
      scale = std::max(scale, std::abs(ex[i]));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) e = std::max(e, std::abs(num[i] - ex[i]) / scale);
    comp.add("square_identity", e, tol);
  } else {
    comp.skip("square_identity", "nested quadrature limited to dimension <= 3");
  }
  return comp.done(std::move(r));
}

// ---- Lie algebra actions ----

CheckRecord check_cayley_ladder(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  long fail = 0, total = 0;
  GTriple E = triple_E(A), H = triple_H(A), F = triple_F(A);
  for (const GTriple* X : {&E, &H, &F}) {
    GTriple t = cayley_transform(A, *X, CayleyDirection::Inverse);
    total += 2;
    if (!triple_equal(cayley_transform(A, t, CayleyDirection::Forward), *X)) ++fail;
    if (!triple_equal(cayley_transform(A, cayley_transform(A, *X, CayleyDirection::Forward), CayleyDirection::Inverse), *X))
      ++fail;
  }
  GTriple Et = cayley_transform(A, E, CayleyDirection::Inverse);
  GTriple Ht = cayley_transform(A, H, CayleyDirection::Inverse);
  GTriple Ft = cayley_transform(A, F, CayleyDirection::Inverse);
  MPoly tr = trace_poly(A);
  Q rl = A.r_lambda();
  for (int m = 0; m <= c.cfg.max_degree; ++m) {
    MPoly t = tr.pow(m);
    total += 3;
    if (!equal_on_orbit(A, drho_apply(B, Et, t), tr.pow(m + 1) * GQ::i())) ++fail;
    if (!equal_on_orbit(A, drho_apply(B, Ht, t), t * GQ(Q(rl + 2 * m)))) ++fail;
    MPoly fexp = m ? tr.pow(m - 1) * GQ(Q(0), Q(m * (rl + m - 1))) : MPoly(A.dim());
    if (!equal_on_orbit(A, drho_apply(B, Ft, t), fexp)) ++fail;
  }
  return exact(std::move(r), fail, total);
}

CheckRecord check_intertwining(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  HermiteBasis hb(B);
  long fail = 0, total = 0;
  GTriple E = triple_E(A), H = triple_H(A), F = triple_F(A);
  for (const auto& a : multi_indices(A.dim(), std::min(c.cfg.max_degree, 3)))
    for (const GTriple* X : {&E, &H, &F}) {
      WeightedFn g = dpi_apply(B, *X, hb.get(a));
      ++total;
      if (g.s != Q(-1)) {
        ++fail;
        continue;
      }
      MPoly lhs = segal_bargmann_exact(A, hb.expand(g.p));
      MPoly rhs = normal_form(A, drho_apply(B, *X, MPoly::monomial(a)));
      if (!(lhs == rhs)) ++fail;
    }
  // Inversion on the Fock side: coefficients pick up (-1)^{|a|}.
  for (const auto& a : multi_indices(A.dim(), 2)) {
    std::map<Mono, GQ> co{{a, GQ(1)}};
    auto flipped = unitary_inversion_exact(co);
    ++total;
    if (!(flipped.at(a) == GQ(total_degree(a) % 2 ? -1 : 1))) ++fail;
  }
  return exact(std::move(r), fail, total);
}

CheckRecord check_sl2(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  long fail = 0, total = 0;
  GTriple E = triple_E(A), H = triple_H(A), F = triple_F(A);
  for (int m = 0; m <= 2; ++m) {
    Sl2Model M = sl2_model(A, m);
    for (int k = 0; k <= 4; ++k) {
      RadialFn p = M.phi(k);
      auto [r1, i1] = M.apply(Sl2Element::et, p);
      auto [r2, i2] = M.apply(Sl2Element::ht, p);
      auto [r3, i3] = M.apply(Sl2Element::ft, p);
      total += 3;
      if (!(r1 == RadialFn{} && i1 == M.phi(k + 1).scaled(Q(2)))) ++fail;
      if (!(i2 == RadialFn{} && r2 == p.scaled(Q(M.s + 2 * k)))) ++fail;
      if (!(r3 == RadialFn{} && i3 == M.phi(k - 1).scaled(Q(k * (M.s + k - 1)) / 2))) ++fail;
    }
    if (A.rank() < 2 && m > 0) continue;
    for (const auto& h : harmonic_basis(B, m).basis)
      for (int k = 0; k <= 2; ++k) {
        RadialFn p = M.phi(k);
        std::pair<const GTriple*, Sl2Element> pairs[] = {{&E, Sl2Element::e}, {&H, Sl2Element::h}, {&F, Sl2Element::f}};
        for (const auto& [X, el] : pairs) {
          WeightedFn lhs = dpi_apply(B, *X, phi_m(A, m, p, h));
          auto [re, im] = M.apply(el, p);
          MPoly rhs = phi_m(A, m, re, h).p + phi_m(A, m, im, h).p * GQ::i();
          ++total;
          if (lhs.s != Q(-1) || !equal_on_orbit(A, lhs.p, rhs)) ++fail;
        }
      }
  }
  return exact(std::move(r), fail, total);
}

// ---- folding ----

CheckRecord check_folding(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  HermiteBasis hb(B);
  int k = A.matrix_size();
  auto rng = make_rng(c.cfg, r.name);
  std::uniform_real_distribution<double> U(-0.7, 0.7);
  std::vector<std::vector<cplx>> ws;
  for (int i = 0; i < 10; ++i) {
    std::vector<cplx> w(k);
    for (auto& x : w) x = cplx(U(rng), U(rng));
    ws.push_back(w);
  }
  Composite comp;
  const double tol = 1e-6 * c.cfg.tol_scale;
  std::vector<Mono> tests = {Mono(A.dim(), 0), unit_index(A.dim(), 0), unit_index(A.dim(), A.sym_index(0, 1))};
  std::vector<cplx> scalars;
  double resid = 0;
  for (const auto& a : tests) {
    MPoly Hp = hb.get(a).p;
    std::vector<cplx> L, R;
    for (const auto& w : ws) {
      L.push_back(MPoly::monomial(a).eval(folding_map(A, w)));
      R.push_back(classical_segal_bargmann(
          k, 1.0,
          [&](const std::vector<double>& x) {
            std::vector<cplx> xc(x.begin(), x.end());
            return Hp.eval(folding_map(A, xc)).real();
          },
          w));
    }
    FoldingReport rep = folding_fit(L, R);
    scalars.push_back(rep.scalar);
    resid = std::max(resid, rep.residual);
  }
  double spread = 0;
  for (const auto& s : scalars) spread = std::max(spread, std::abs(s - scalars[0]) / std::abs(scalars[0]));
  comp.add("fit_residual", resid, tol);
  comp.add("scalar_spread", spread, tol);
  double expect = std::pow(2.0 / std::numbers::pi, k / 2.0);
  comp.add("scalar_vs_(2/pi)^(k/2)", std::abs(scalars[0] - expect) / expect, tol);

  // e^r + e^{-r} = 2 sqrt(pi) I~_{-1/2}(r): coefficients of r^{2n} are 2/(2n)! and
  // 2 sqrt(pi) / (4^n n! Gamma(n + 1/2)) = 2 / (4^n n! (1/2)_n).
  long fail = 0;
  for (int n = 0; n <= 20; ++n)
    if (Q(2) / factorial_q(2 * n) != Q(2) / (qpow(Q(4), n) * factorial_q(n) * pochhammer(Q(1, 2), n))) ++fail;
  comp.add_exact("two_point_kernel_series", fail, 21);
  double kn = 0;
  for (double rr : {0.5, 1.0, 3.0, 7.0}) {
    double lhs = std::exp(rr) + std::exp(-rr);
    double rhs = 2 * std::sqrt(std::numbers::pi) * bessel_tilde(BesselKind::I, -0.5, rr).real();
    kn = std::max(kn, std::abs(lhs - rhs) / lhs);
  }
  comp.add("two_point_kernel_numeric", kn, 1e-12 * c.cfg.tol_scale);
  return comp.done(std::move(r));
}

// ---- heat kernel ----

/// Image of a trace-only function at every node of q: the heat semigroup commutes with the
/// automorphisms fixing e, which act transitively on each shell tr x = r, so one evaluation
/// per radius suffices.
std::vector<double> per_shell(const Quadrature& q, const std::function<double(const Vec<double>&)>& f) {
  std::map<double, std::size_t> rep;
  for (std::size_t i = 0; i < q.size(); ++i) rep.emplace(q.radii[i], i);
  std::vector<std::pair<double, std::size_t>> shells(rep.begin(), rep.end());
  std::vector<double> vals(shells.size());
  parallel_for(shells.size(), [&](std::size_t i) { vals[i] = f(q.nodes[shells[i].second]); });
  std::map<double, double> by_radius;
  for (std::size_t i = 0; i < shells.size(); ++i) by_radius[shells[i].first] = vals[i];
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = by_radius.at(q.radii[i]);
  return out;
}

CheckRecord check_heat(const CheckContext& c, CheckRecord r) {
  const Algebra& A = c.A;
  BesselOp B(A);
  HermiteBasis hb(B);
  auto rng = make_rng(c.cfg, r.name);
  const double s = c.cfg.tol_scale;
  const double rl = A.r_lambda_d();
  int G = c.cfg.angular_order ? c.cfg.angular_order : std::min(default_angular(A), 16);
  int R = c.cfg.radial_order ? c.cfg.radial_order : (A.kind() == AlgebraKind::Rank1 ? 40 : 20);
  // Nested applications: a fine inner rule and a coarser outer rule.
  const int outer = std::max(16, R / 2);
  // Angular order for nested non-radial integrals; the node count grows quickly with dimension.
  const int Gn = c.cfg.angular_order ? c.cfg.angular_order : (A.dim() <= 3 ? G : std::min(G, A.dim() == 4 ? 10 : 6));
  Composite comp;

  long pos_fail = 0;
  for (int i = 0; i < 20; ++i) {
    auto x = random_xi(A, rng, 0.05, 10), y = random_xi(A, rng, 0.05, 10);
    double t = 0.1 + 0.2 * i;
    double g = heat_kernel(A, t, x, y);
    if (!(g > 0) || g != heat_kernel(A, t, y, x)) ++pos_fail;
  }
  comp.add_exact("positivity_symmetry", pos_fail, 20);

  if (A.dim() <= 3) {
    comp.run("dual_representation", 1e-6 * s, [&] {
      double dual = 0;
      bool r1 = A.kind() == AlgebraKind::Rank1;
      for (double t : {0.5, 1.0}) {
        Quadrature q = xi_quadrature(A, r1 ? 80 : 60, r1 ? 0 : (A.kind() == AlgebraKind::SymMat ? 40 : 60), t);
        for (int i = 0; i < 3; ++i) {
          auto x = random_xi(A, rng, 0.1, 2), y = random_xi(A, rng, 0.1, 2);
          dual = std::max(dual, std::abs(heat_kernel_dual(A, t, x, y, q) / heat_kernel(A, t, x, y) - 1));
        }
      }
      return dual;
    });
  } else {
    comp.skip("dual_representation", "oscillatory quadrature limited to dimension <= 3");
  }

  double norm = 0, oracle = 0;
  comp.run("normalization+closed_form", 1e-6 * s, [&] {
    for (double t : {0.5, 1.0, 2.0}) {
      Quadrature q = heat_quadrature(A, t, R, G);
      std::vector<double> one(q.size(), 1.0);
      Quadrature q2 = xi_quadrature(A, R, G, 1.0 / t + 1.0);
      std::vector<double> ps(q2.size());
      for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = std::exp(-q2.radii[i]);
      for (int i = 0; i < 5; ++i) {
        auto x = random_xi(A, rng, 0.1, 3);
        norm = std::max(norm, std::abs(heat_apply(A, t, q, one, x) - 1));
        oracle = std::max(oracle, std::abs(heat_apply(A, t, q2, ps, x) / heat_exponential_oracle(A, 1, t, x) - 1));
      }
    }
    return std::max(norm, oracle);
  });
  comp.parts.push_back("normalization=" + sci(norm) + ", closed form e^{-tr}=" + sci(oracle));

  comp.run("semigroup", 1e-6 * s, [&] {
    const double s1 = 0.5, t1 = 0.5;
    Quadrature qi = xi_quadrature(A, 2 * R, G, 1.0 / t1 + 1.0);
    std::vector<double> ps(qi.size());
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = std::exp(-qi.radii[i]);
    Quadrature qo = xi_quadrature(A, outer, G, 1.0 / s1 + 1.0 / (1 + t1));
    auto g = per_shell(qo, [&](const Vec<double>& x) { return heat_apply(A, t1, qi, ps, x); });
    double semi = 0;
    for (int i = 0; i < 5; ++i) {
      auto x = random_xi(A, rng, 0.1, 3);
      semi = std::max(semi, std::abs(heat_apply(A, s1, qo, g, x) / heat_exponential_oracle(A, 1, s1 + t1, x) - 1));
    }
    return semi;
  });

  comp.run("pde_residual", 1e-4 * s, [&] {
    double pde = 0;
    for (int i = 0; i < 10; ++i) {
      auto x = random_xi(A, rng, 0.2, 3), y = random_xi(A, rng, 0.2, 3);
      pde = std::max(pde, heat_pde_residual(A, 0.3 + 0.2 * i, x, y).residual);
    }
    return pde;
  });

  comp.run("factorization", 1e-6 * s, [&] {
    // R* f = B_Xi(|R| f). For psi_0 the inner operator is evaluated per shell; the
    // non-radial h_{e_0} needs the full nested rule and runs in dimension <= 4.
    Quadrature qd = xi_quadrature(A, R, G, 1.5);
    Quadrature qs = xi_quadrature(A, outer, G, 1.5);
    Quadrature qi = xi_quadrature(A, 2 * R, G, 2.0);
    auto p0 = real_parts(sample(qi, hb.get(Mono(A.dim(), 0)), A));
    std::vector<std::vector<cplx>> g(1);
    for (double v : per_shell(qs, [&](const Vec<double>& x) { return abs_r_apply(A, qi, p0, x); })) g[0].push_back(v);
    std::vector<std::vector<double>> fd = {real_parts(sample(qd, hb.get(Mono(A.dim(), 0)), A))};
    Quadrature qs1 = xi_quadrature(A, R / 2, Gn, 1.5);
    std::vector<std::vector<cplx>> g1;
    if (A.dim() <= 4) {
      Mono e0 = unit_index(A.dim(), 0);
      Quadrature qi1 = xi_quadrature(A, 2 * R, Gn, 2.0);
      auto f1 = real_parts(sample(qi1, hb.get(e0), A));
      g1.assign(1, std::vector<cplx>(qs1.size()));
      parallel_for(qs1.size(), [&](std::size_t i) { g1[0][i] = abs_r_apply(A, qi1, f1, qs1.nodes[i]); });
      fd.push_back(real_parts(sample(qd, hb.get(e0), A)));
    }
    double fac = 0;
    for (int i = 0; i < 5; ++i) {
      auto z = random_xc_point(A, rng, 1.0);
      std::vector<cplx> via = {segal_bargmann_numeric(A, qs, g, z)[0]};
      if (!g1.empty()) via.push_back(segal_bargmann_numeric(A, qs1, g1, z)[0]);
      for (std::size_t b = 0; b < via.size(); ++b) {
        cplx d = r_star_apply(A, qd, fd[b], z);
        fac = std::max(fac, std::abs(d - via[b]) / std::abs(d));
      }
    }
    return fac;
  });
  if (A.dim() > 4) comp.parts.push_back("factorization on h_{e_0} limited to dimension <= 4");

  comp.run("abs_r_squared", 1e-6 * s, [&] {
    // |R| |R| psi_0 = R R* psi_0 = 2^{2 r lambda} 3^{-r lambda} e^{-tr/3}.
    Quadrature qi = xi_quadrature(A, 2 * R, G, 2.0);
    std::vector<double> ps(qi.size());
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = std::exp(-qi.radii[i]);
    Quadrature qo = xi_quadrature(A, outer, G, 1.5);
    auto g = per_shell(qo, [&](const Vec<double>& x) { return abs_r_apply(A, qi, ps, x); });
    double e = 0;
    for (int i = 0; i < 5; ++i) {
      auto x = random_xi(A, rng, 0.1, 3);
      double direct = rr_star_apply(A, qi, ps, x);
      double nested = abs_r_apply(A, qo, g, x);
      double closed = std::pow(4.0 / 3.0, rl) * std::exp(-A.trace(x) / 3.0);
      e = std::max({e, std::abs(nested / closed - 1), std::abs(direct / closed - 1)});
    }
    return e;
  });

  double ratio = 0;
  comp.run("norm_ratio_excess", 1e-6 * s, [&] {
    // ||R R* f|| <= 2^{2 r lambda} ||f|| on 20 random combinations of h_a, |a| <= 3.
    Quadrature qn = xi_quadrature(A, R / 2, Gn, 2.0 / 3.0);
    Quadrature qi = xi_quadrature(A, 2 * R, Gn, 1.5);
    auto al = multi_indices(A.dim(), std::min(c.cfg.max_degree, 3));
    std::vector<std::vector<double>> hi, hn;
    for (const auto& a : al) {
      hi.push_back(real_parts(sample(qi, hb.get(a), A)));
      hn.push_back(real_parts(sample(qn, hb.get(a), A)));
    }
    // R R* on each basis function once; combinations follow by linearity.
    std::vector<std::vector<double>> rr(al.size(), std::vector<double>(qn.size()));
    parallel_for(qn.size(), [&](std::size_t i) {
      auto v = rr_star_apply(A, qi, hi, qn.nodes[i]);
      for (std::size_t b = 0; b < al.size(); ++b) rr[b][i] = v[b];
    });
    std::normal_distribution<double> N(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> co(al.size());
      for (auto& v : co) v = N(rng);
      double n1 = 0, n2 = 0;
      for (std::size_t i = 0; i < qn.size(); ++i) {
        double f = 0, g = 0;
        for (std::size_t b = 0; b < al.size(); ++b) {
          f += co[b] * hn[b][i];
          g += co[b] * rr[b][i];
        }
        n1 += qn.weights[i] * f * f;
        n2 += qn.weights[i] * g * g;
      }
      ratio = std::max(ratio, std::sqrt(n2 / n1) / std::pow(2.0, 2 * rl));
    }
    return std::max(0.0, ratio - 1.0);
  });
  comp.parts.push_back("max ||RR*f|| / (2^{2 r lambda} ||f||) = " + sci(ratio));
  return comp.done(std::move(r));
}

CheckRecord check_heat_sb(const CheckContext& c, CheckRecord r) {
  // B_Xi f(x) = 2^{r lambda} e^{tr x / 2} (e^{B_e} f)(x) on h_a at real points of Xi.
  const Algebra& A = c.A;
  BesselOp B(A);
  HermiteBasis hb(B);
  auto rng = make_rng(c.cfg, r.name);
  int G = c.cfg.angular_order ? c.cfg.angular_order : std::min(default_angular(A), 16);
  int R = c.cfg.radial_order ? c.cfg.radial_order : (A.kind() == AlgebraKind::Rank1 ? 40 : 24);
  Quadrature q = xi_quadrature(A, R, G, 2.0);
  std::vector<Vec<double>> xs;
  for (int i = 0; i < 10; ++i) xs.push_back(random_xi(A, rng, 0.2, 2.0));
  double worst = 0;
  for (const auto& a : multi_indices(A.dim(), std::min(c.cfg.max_degree, 2))) {
    auto fv = real_parts(sample(q, hb.get(a), A));
    std::vector<double> num(xs.size()), ex(xs.size());
    double scale = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      num[i] = std::pow(2.0, A.r_lambda_d()) * std::exp(A.trace(xs[i]) / 2) * heat_apply(A, 1.0, q, fv, xs[i]);
      ex[i] = MPoly::monomial(a).eval(to_cplx(xs[i])).real();
      scale = std::max(scale, std::abs(ex[i]));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) worst = std::max(worst, std::abs(num[i] - ex[i]) / scale);
  }
  return finish(std::move(r), worst, c.tol);
}

// ---- catalogue ----

bool any(const Algebra&) { return true; }
bool rank_one(const Algebra& A) { return A.kind() == AlgebraKind::Rank1; }
bool minkowski(const Algebra& A) { return A.kind() == AlgebraKind::Minkowski; }
bool symmat(const Algebra& A) { return A.kind() == AlgebraKind::SymMat; }

using Runner = CheckRecord (*)(const CheckContext&, CheckRecord);

CheckSpec entry(std::string name, std::string anchor, double tol, bool (*applies)(const Algebra&), Runner run) {
  CheckSpec s;
  s.name = name;
  s.anchor = anchor;
  s.default_tol = tol;
  s.applies = applies;
  s.run = [run, name, anchor](const CheckContext& c) {
    CheckRecord r;
    r.name = name;
    r.anchor = anchor;
    return run(c, r);
  };
  return s;
}

std::vector<CheckSpec> build_catalogue() {
  std::vector<CheckSpec> v = {
      entry("fock.bessel_fischer", "Bessel-Fischer product equals the Fock inner product", 1.0, rank_one,
           check_fock_bessel_fischer),
      entry("fock.inverse_transform", "inverse Segal-Bargmann transform on monomials", 1e-6, rank_one, check_fock_inverse),
      entry("fock.reproducing", "reproducing kernel of the Fock space and pointwise bound", 1.0, rank_one,
           check_fock_reproducing),
      entry("fock.reproducing_exact", "homogeneous reproducing kernels in the Fischer product", 0, any,
           check_reproducing_exact),
      entry("harmonics.orthogonality", "completeness and orthogonality of tr^k H^(m-k)", 0, any,
           check_harmonic_orthogonality),
      entry("harmonics.structure", "harmonic polynomials, decomposition, spherical and highest weight vectors", 0, any,
           check_harmonics),
      entry("heat.kernel", "heat kernel properties and restriction-map factorization", 1.0, any, check_heat),
      entry("heat.segal_bargmann", "Segal-Bargmann transform as the time-one heat semigroup", 1e-6, any, check_heat_sb),
      entry("inversion.unitary", "unitary inversion operator and Bochner identity", 1.0, any, check_inversion),
      entry("jordan.identities", "Jordan identity, trace form, frame and Peirce data", 0, any, check_jordan_identities),
      entry("lie.cayley_ladder", "Cayley transform of the sl2-triple and ladder action on tr^m", 0, any,
           check_cayley_ladder),
      entry("lie.intertwining", "Segal-Bargmann transform intertwines d pi and d rho", 0, any, check_intertwining),
      entry("orbit.normalization", "psi_0 is a unit vector", 1e-10, any, check_orbit_normalization),
      entry("orbit.rules", "quadrature rules: orbit membership, dilation, folding isometry", 1.0, any, check_orbit_rules),
      entry("poly.bessel_commuting", "Bessel operator components commute", 0, any, check_bessel_commuting),
      entry("poly.bessel_degree", "Bessel operator lowers the degree by one", 0, any, check_bessel_degree),
      entry("poly.bessel_trace_action", "action of B_e on weighted harmonics and on tr^k p", 0, any,
           check_bessel_trace_action),
      entry("poly.fischer_adjoint", "multiplication and Bessel operators are adjoint", 0, any, check_fischer_adjoint),
      entry("poly.fischer_ideal", "Fischer product vanishes against the orbit ideal", 0, minkowski, check_fischer_ideal),
      entry("poly.hermite_laguerre", "rank-one Hermite functions are Laguerre functions", 0, rank_one,
           check_hermite_laguerre),
      entry("poly.normal_form", "normal forms agree with polynomials on the complex orbit", 0, any, check_normal_form),
      entry("sb.exact_path", "exact and numeric Segal-Bargmann transforms agree", 1e-6, any, check_sb_exact_path),
      entry("sb.hermite", "Segal-Bargmann transform maps h_a to z^a", 1e-6, any, check_sb_hermite),
      entry("sb.kernel_series", "reproducing kernel equals the sum of its homogeneous parts", 1e-10, any,
           check_kernel_series),
      entry("sb.pointwise_bound", "pointwise bound from the reproducing kernel", 0, any, check_pointwise_bound),
      entry("sb.unitarity", "Segal-Bargmann transform is unitary", 1e-6, any, check_sb_unitarity),
      entry("sl2.structure", "sl2 ladder and the intertwiner Phi_m", 0, any, check_sl2),
      entry("so2n.cross_check", "Minkowski Bessel operator and orbit polynomial dimensions", 0, minkowski, check_so2n),
      entry("specialfn.bessel_relations", "J~(iz) = I~(z), evenness and the kernel F", 1e-10, any,
           check_bessel_relations),
      entry("specialfn.identities", "Bessel ODE, K-Bessel moments, Gegenbauer identity, Fock constant", 1.0, any,
           check_specialfn_identities),
      entry("folding.scalar", "folding map relates the transform to the classical one", 1.0, symmat, check_folding),
  };
  std::sort(v.begin(), v.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.name < b.name; });
  return v;
}

}  // namespace

const std::vector<CheckSpec>& check_catalogue() {
  static const std::vector<CheckSpec> cat = build_catalogue();
  return cat;
}

const CheckSpec& find_check(const std::string& name) {
  for (const auto& s : check_catalogue())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown check: " + name);
}

CheckRecord run_check(const CheckSpec& spec, const Algebra& A, const SuiteConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  CheckRecord r;
  r.name = spec.name;
  r.anchor = spec.anchor;
  if (!spec.applies(A)) {
    r.status = CheckStatus::Skip;
    r.detail = "not applicable to " + A.descriptor();
    return r;
  }
  auto it = cfg.tolerances.find(spec.name);
  double tol = it != cfg.tolerances.end() ? it->second : spec.default_tol * cfg.tol_scale;
  try {
    r = spec.run(CheckContext{A, cfg, tol});
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.measured = kInf;
    r.tolerance = tol;
    r.detail = std::string("exception: ") + e.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool SuiteReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t SuiteReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  Algebra A = Algebra::parse(cfg.algebra);
  std::vector<const CheckSpec*> todo;
  for (const auto& s : check_catalogue()) {
    if (!cfg.only.empty() && std::find(cfg.only.begin(), cfg.only.end(), s.name) == cfg.only.end()) continue;
    todo.push_back(&s);
  }
  SuiteReport rep;
  rep.algebra = A.descriptor();
  rep.seed = cfg.seed;
  rep.version = kToolVersion;
  rep.checks.resize(todo.size());
  parallel_for(todo.size(), [&](std::size_t i) { rep.checks[i] = run_check(*todo[i], A, cfg); });
  return rep;
}

namespace {

nlohmann::json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

}  // namespace

std::string report_json(const SuiteReport& r, bool include_runtime) {
  nlohmann::ordered_json j;
  j["tool_version"] = r.version;
  j["algebra"] = r.algebra;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  j["counts"] = {{"pass", r.count(CheckStatus::Pass)},
                 {"fail", r.count(CheckStatus::Fail)},
                 {"skip", r.count(CheckStatus::Skip)}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["anchor"] = c.anchor;
    e["status"] = status_str(c.status);
    e["measured"] = number_or_string(c.measured);
    e["expected"] = c.expected;
    e["tolerance"] = c.tolerance;
    if (include_runtime) e["runtime_ms"] = c.runtime_ms;
    e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

std::string report_csv(const SuiteReport& r) {
  auto quote = [](const std::string& s) {
    std::string o = "\"";
    for (char ch : s) o += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return o + "\"";
  };
  std::ostringstream os;
  os.precision(6);
  os << "name,status,measured,expected,tolerance,runtime_ms,anchor,detail\n";
  for (const auto& c : r.checks)
    os << c.name << "," << status_str(c.status) << "," << c.measured << "," << c.expected << "," << c.tolerance << ","
       << c.runtime_ms << "," << quote(c.anchor) << "," << quote(c.detail) << "\n";
  return os.str();
}

SuiteConfig load_config(const std::string& json_text, SuiteConfig cfg) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      if (k == "algebra")
        cfg.algebra = it->get<std::string>();
      else if (k == "max_degree")
        cfg.max_degree = it->get<int>();
      else if (k == "radial_order")
        cfg.radial_order = it->get<int>();
      else if (k == "angular_order")
        cfg.angular_order = it->get<int>();
      else if (k == "tol_scale")
        cfg.tol_scale = it->get<double>();
      else if (k == "seed")
        cfg.seed = it->get<std::uint64_t>();
      else if (k == "tolerances")
        cfg.tolerances = it->get<std::map<std::string, double>>();
      else if (k == "checks")
        cfg.only = it->get<std::vector<std::string>>();
      else
        throw std::invalid_argument("config: unknown key '" + k + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (cfg.max_degree < 0 || cfg.radial_order < 0 || cfg.angular_order < 0 || !(cfg.tol_scale > 0))
    throw std::invalid_argument("config: degrees and orders must be non-negative and tol_scale positive");
  for (const auto& [name, v] : cfg.tolerances) {
    find_check(name);
    if (!(v >= 0)) throw std::invalid_argument("config: tolerance for " + name + " must be non-negative");
  }
  for (const auto& name : cfg.only) find_check(name);
  return cfg;
}

}  // namespace jf
