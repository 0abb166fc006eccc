#include "jf/specialfn.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

namespace jf {

namespace {

using ld = long double;
using cld = std::complex<long double>;

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_integer(double x) { return std::floor(x) == x; }

bool is_half_integer(double x) { return is_integer(x - 0.5); }

double lanczos_gamma(double x) {
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  x -= 1.0;
  double a = kLanczos[0];
  double t = x + kLanczosG + 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

// Hankel expansion coefficients a_k(alpha) = prod_{j<=k} (4a^2-(2j-1)^2) / (k! 8^k).
struct Hankel {
  double p = 0.0, q = 0.0;  // P and Q sums
  bool ok = false;
};

Hankel hankel_pq(double alpha, double x, double eps) {
  Hankel h;
  double mu = 4.0 * alpha * alpha;
  double ak = 1.0;
  double xk = 1.0;
  double prev = INFINITY;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      ak *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k);
      xk *= x;
    }
    double term = ak / xk;
    if (std::fabs(term) > prev && k > 1) return h;  // diverging before reaching eps
    int sign = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0)
      h.p += sign * term;
    else
      h.q += sign * term;
    if (term == 0.0 || std::fabs(term) < eps) {
      h.ok = true;
      return h;
    }
    prev = std::fabs(term);
  }
  return h;
}

// J~_a(x) for real x > 0 by the Hankel expansion; ok=false when it cannot reach eps.
bool j_tilde_hankel(double alpha, double x, double eps, double& out) {
  Hankel h = hankel_pq(alpha, x, eps);
  if (!h.ok) return false;
  double chi = x - (alpha / 2.0 + 0.25) * kPi;
  double j = std::sqrt(2.0 / (kPi * x)) * (h.p * std::cos(chi) - h.q * std::sin(chi));
  out = std::pow(x / 2.0, -alpha) * j;
  return true;
}

// sum_n s^n / (Gamma(n+a+1) n!) with s = t (I) or -t (J); a > -1 or non-integer.
cld entire_series(double alpha, cld s, const SeriesControl& ctrl) {
  ld eps = std::min<ld>(ctrl.rel_tol, 1e-18L);
  cld term = static_cast<ld>(rgamma(alpha + 1.0));
  cld sum = 0;
  ld maxterm = 0;
  ld abs_s = std::abs(s);
  for (int n = 0; n < ctrl.max_terms; ++n) {
    sum += term;
    ld at = std::abs(term);
    maxterm = std::max(maxterm, at);
    ld denom = static_cast<ld>(n + 1) * static_cast<ld>(n + 1 + alpha);
    bool decreasing = std::fabs(denom) > abs_s;
    if (decreasing && n > 0 &&
        (at <= eps * std::abs(sum) || at <= 1e-30L * maxterm || abs_s == 0))
      return sum;
    term = term * s / denom;
  }
  throw SeriesError("Bessel series did not converge within max_terms");
}

// Asymptotic expansion of log I_nu(x) for large x.
double log_i_asymptotic(double nu, double x) {
  double mu = 4.0 * nu * nu;
  double ak = 1.0, xk = 1.0, sum = 1.0, prev = INFINITY;
  for (int k = 1; k < 100; ++k) {
    ak *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k);
    xk *= x;
    double term = ak / xk;
    if (std::fabs(term) > prev) break;
    sum += (k % 2 ? -term : term);
    if (std::fabs(term) < 1e-17) break;
    prev = std::fabs(term);
  }
  return x - 0.5 * std::log(2.0 * kPi * x) + std::log(sum);
}

double k_tilde_integer_series(int n, double x) {
  double y = x * x / 4.0;
  double lx = std::log(x / 2.0);
  ld finite = 0;
  if (n > 0) {
    ld term = 0;
    for (int k = 0; k < n; ++k) {
      term = static_cast<ld>(std::tgamma(n - k)) / static_cast<ld>(std::tgamma(k + 1.0)) *
             std::pow(static_cast<ld>(-y), k);
      finite += term;
    }
    finite *= 0.5L * std::pow(static_cast<ld>(x / 2.0), static_cast<ld>(-2 * n));
  }
  ld itilde = 0, psum = 0;
  ld t = 1.0L / static_cast<ld>(std::tgamma(n + 1.0));  // y^k / (k! (n+k)!)
  for (int k = 0; k < 200; ++k) {
    itilde += t;
    psum += (static_cast<ld>(digamma_int(k + 1)) + static_cast<ld>(digamma_int(n + k + 1))) * t;
    t *= y / (static_cast<ld>(k + 1) * static_cast<ld>(n + k + 1));
    if (t < 1e-22L * itilde) break;
  }
  ld sgn = (n % 2 == 0) ? 1.0L : -1.0L;
  return static_cast<double>(finite - sgn * lx * itilde + sgn * 0.5L * psum);
}

double k_tilde_trapezoid(double alpha, double x) {
  // K_a(x) = int_0^inf exp(-x cosh u) cosh(a u) du; trapezoid converges geometrically.
  const double h = 0.125;
  ld sum = 0.5L * std::exp(static_cast<ld>(-x));
  for (int j = 1; j < 100000; ++j) {
    double u = j * h;
    ld f = std::exp(static_cast<ld>(-x * std::cosh(u))) * std::cosh(static_cast<ld>(alpha * u));
    sum += f;
    if (x * std::sinh(u) > std::fabs(alpha) + 1.0 && f < 1e-20L * sum) break;
  }
  double k = static_cast<double>(h * sum);
  return std::pow(x / 2.0, -alpha) * k;
}

double k_tilde_asymptotic(double alpha, double x) {
  double mu = 4.0 * alpha * alpha;
  double ak = 1.0, xk = 1.0, sum = 1.0, prev = INFINITY;
  for (int k = 1; k < 100; ++k) {
    ak *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k);
    xk *= x;
    double term = ak / xk;
    if (term == 0.0) break;
    if (std::fabs(term) > prev) break;
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    prev = std::fabs(term);
  }
  return std::pow(x / 2.0, -alpha) * std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

}  // namespace

double gamma_fn(double x) {
  if (x <= 0 && is_integer(x)) throw DomainError("gamma_fn: pole at non-positive integer");
  if (x > 0 && is_integer(x) && x <= 171) {
    double r = 1.0;
    for (int k = 2; k < static_cast<int>(x); ++k) r *= k;
    return r;
  }
  if (x > 0 && is_half_integer(x) && x <= 171) {
    double r = std::sqrt(kPi);
    for (double k = 0.5; k < x; k += 1.0) r *= k;
    return r;
  }
  return lanczos_gamma(x);
}

double lgamma_fn(double x) {
  if (x <= 0 && is_integer(x)) throw DomainError("lgamma_fn: pole at non-positive integer");
  if (x < 0.5) return std::log(kPi / std::fabs(std::sin(kPi * x))) - lgamma_fn(1.0 - x);
  if (x < 30.0) return std::log(std::fabs(gamma_fn(x)));
  double y = x - 1.0;
  double a = kLanczos[0];
  double t = y + kLanczosG + 0.5;
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (y + i);
  return 0.5 * std::log(2.0 * kPi) + (y + 0.5) * std::log(t) - t + std::log(a);
}

double rgamma(double x) {
  if (x <= 0 && is_integer(x)) return 0.0;
  if (x > 171.0) return std::exp(-lgamma_fn(x));
  return 1.0 / gamma_fn(x);
}

double digamma_int(int n) {
  if (n < 1) throw DomainError("digamma_int: n must be >= 1");
  double s = -0.57721566490153286061;
  for (int k = 1; k < n; ++k) s += 1.0 / k;
  return s;
}

double pochhammer_d(double a, int k) {
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= a + j;
  return r;
}

cplx bessel_tilde_sq(BesselKind kind, double alpha, cplx t, const SeriesControl& ctrl) {
  if (kind == BesselKind::K) throw DomainError("bessel_tilde_sq: K is not entire");
  // Negative integer order: reduce to positive order.
  if (alpha < 0 && is_integer(alpha)) {
    int N = static_cast<int>(-alpha);
    cplx base = bessel_tilde_sq(kind, static_cast<double>(N), t, ctrl);
    cplx s = (kind == BesselKind::I) ? t : -t;
    return std::pow(s, N) * base;
  }
  // s is the argument of the J-type series sum (-s)^n...; real positive s is oscillatory.
  cplx s = (kind == BesselKind::J) ? t : -t;
  if (s.imag() == 0.0 && s.real() > 0.0) {
    double x = 2.0 * std::sqrt(s.real());
    if (x > ctrl.oscillatory_switch) {
      double v;
      if (j_tilde_hankel(alpha, x, 1e-16, v)) return v;
    }
  }
  cld sl(-s.real(), -s.imag());
  cld r = entire_series(alpha, sl, ctrl);
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

cplx bessel_tilde(BesselKind kind, double alpha, cplx z, const SeriesControl& ctrl) {
  if (kind == BesselKind::K) {
    if (z.imag() != 0.0 || z.real() <= 0.0)
      throw DomainError("bessel_tilde: K requires a real positive argument");
    return k_tilde(alpha, z.real(), ctrl);
  }
  return bessel_tilde_sq(kind, alpha, z * z / 4.0, ctrl);
}

double k_tilde(double alpha, double x, const SeriesControl& ctrl) {
  if (!(x > 0.0)) throw DomainError("k_tilde: argument must be positive");
  if (x > ctrl.asymptotic_switch) return k_tilde_asymptotic(alpha, x);
  if (x > 2.0) return k_tilde_trapezoid(alpha, x);
  if (is_integer(alpha)) {
    int n = static_cast<int>(std::fabs(alpha));
    double kn = k_tilde_integer_series(n, x);
    return alpha < 0 ? std::pow(x / 2.0, 2.0 * n) * kn : kn;
  }
  double a = alpha;
  cld y(static_cast<ld>(x) * x / 4.0L, 0);
  ld ineg = entire_series(-a, y, ctrl).real();
  ld ipos = entire_series(a, y, ctrl).real();
  ld v = static_cast<ld>(kPi) / (2.0L * std::sin(static_cast<ld>(kPi) * a)) *
         (std::pow(static_cast<ld>(x / 2.0), static_cast<ld>(-2.0 * a)) * ineg - ipos);
  return static_cast<double>(v);
}

cplx kernel_B(double lambda, cplx t, const SeriesControl& ctrl) {
  if (!(lambda > 0)) throw std::invalid_argument("kernel_B: lambda must be positive");
  return gamma_fn(lambda) * bessel_tilde_sq(BesselKind::I, lambda - 1.0, t, ctrl);
}

double log_kernel_B(double lambda, double t, const SeriesControl& ctrl) {
  if (!(lambda > 0)) throw std::invalid_argument("log_kernel_B: lambda must be positive");
  if (t < 0) throw DomainError("log_kernel_B: t must be non-negative");
  if (t == 0) return 0.0;
  double x = 2.0 * std::sqrt(t);
  if (x > 60.0) {
    double nu = lambda - 1.0;
    // B(t) = Gamma(lambda) (x/2)^{-nu} I_nu(x).
    return lgamma_fn(lambda) - nu * std::log(x / 2.0) + log_i_asymptotic(nu, x);
  }
  double lt = std::log(t);
  double lterm = -lgamma_fn(lambda);
  double m = lterm;
  long double s = 1.0L;
  for (int n = 0; n < std::max(ctrl.max_terms, 400); ++n) {
    lterm += lt - std::log(n + 1.0) - std::log(n + lambda);
    if (lterm > m) {
      s = s * std::exp(static_cast<long double>(m - lterm)) + 1.0L;
      m = lterm;
    } else {
      s += std::exp(static_cast<long double>(lterm - m));
    }
    if ((n + 1.0) * (n + lambda) > t && lterm < m - 45.0) break;
  }
  return lgamma_fn(lambda) + m + static_cast<double>(std::log(s));
}

cplx kernel_F(double r_lambda, double lambda, cplx t, const SeriesControl& ctrl) {
  return std::pow(2.0, -r_lambda) * kernel_B(lambda, -t, ctrl);
}

double k_bessel_moment(double alpha, double beta, double a) {
  if (!(beta + 1 > 0) || !(beta - 2 * alpha + 1 > 0) || !(a > 0))
    throw DomainError("k_bessel_moment: parameters outside the convergence region");
  return std::pow(2.0, beta - 1) * std::pow(a, -beta - 1) * gamma_fn((beta + 1) / 2) *
         gamma_fn((beta - 2 * alpha + 1) / 2);
}

double GammaProduct::value() const {
  double v = std::pow(2.0, pow2.get_d());
  for (const Q& g : gamma_args) v *= gamma_fn(g.get_d());
  return v;
}

std::string GammaProduct::str() const {
  std::ostringstream os;
  os << "2^(" << pow2.get_str() << ")";
  for (const Q& g : gamma_args) os << "*Gamma(" << g.get_str() << ")";
  return os.str();
}

GammaProduct k_bessel_moment_symbolic(const Q& alpha, const Q& beta) {
  if (sgn(beta + 1) <= 0 || sgn(beta - 2 * alpha + 1) <= 0)
    throw DomainError("k_bessel_moment_symbolic: parameters outside the convergence region");
  GammaProduct g;
  g.pow2 = beta - 1;
  g.gamma_args.insert(Q((beta + 1) / 2));
  g.gamma_args.insert(Q((beta - 2 * alpha + 1) / 2));
  return g;
}

GammaProduct fock_normalization_symbolic(int r, const Q& lambda) {
  GammaProduct g;
  g.pow2 = 2 * r * lambda - 2;
  g.gamma_args.insert(Q(r * lambda));
  g.gamma_args.insert(Q((r - 1) * lambda + 1));
  return g;
}

double fock_normalization(int r, double lambda) {
  return std::pow(2.0, 2 * r * lambda - 2) * gamma_fn(r * lambda) * gamma_fn((r - 1) * lambda + 1);
}

cplx classical_poly(PolyKind kind, const std::vector<double>& p, cplx z) {
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw std::invalid_argument("classical_poly: wrong parameter count");
  };
  auto degree = [](double d) {
    if (d < 0 || !is_integer(d)) throw Unsupported("classical_poly: degree must be a non-negative integer");
    return static_cast<long>(d);
  };
  switch (kind) {
    case PolyKind::Gauss2F1:
      need(3);
      if (p[0] > 0 || !is_integer(p[0])) throw Unsupported("2F1: non-terminating series");
      return hyp2f1_terminating<cplx>(static_cast<long>(-p[0]), p[1], p[2], z);
    case PolyKind::Laguerre:
      need(2);
      return laguerre<cplx>(degree(p[0]), p[1], z);
    case PolyKind::Gegenbauer:
      need(2);
      return gegenbauer<cplx>(degree(p[0]), p[1], z);
    case PolyKind::Jacobi:
      need(3);
      return jacobi<cplx>(degree(p[0]), p[1], p[2], z);
  }
  throw std::invalid_argument("classical_poly: unknown kind");
}

Q gegenbauer_chain_constant(long n, const Q& b) {
  Q half(1, 2);
  Q num = factorial_q(2 * n) * pochhammer(b - n + half, 2 * n);
  Q den = pochhammer(half, n) * pochhammer(2 * b - 2 * n, 2 * n) * pochhammer(b + half, n);
  if (sgn(den) == 0) throw DomainError("gegenbauer_chain_constant: degenerate parameters");
  Q c = num / den;
  return (n % 2) ? Q(-c) : c;
}

}  // namespace jf
