/**
 * @file gq.hpp
 * @brief Gaussian rationals over GMP rationals.
 */
#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace jf {

using Q = mpq_class;

/// Gaussian rational re + i*im with arbitrary-precision parts.
struct GQ {
  Q re{0};
  Q im{0};

  GQ() = default;
  GQ(Q r) : re(std::move(r)) {}
  GQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}
  GQ(long v) : re(v) {}
  GQ(int v) : re(v) {}

  static GQ i() { return GQ(Q(0), Q(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GQ conj() const { return GQ(re, -im); }

  GQ& operator+=(const GQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GQ& operator-=(const GQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GQ& operator*=(const GQ& o) {
    Q r = re * o.re - im * o.im;
    Q s = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(s);
    return *this;
  }
  GQ& operator/=(const GQ& o) {
    Q den = o.re * o.re + o.im * o.im;
    if (sgn(den) == 0) throw std::domain_error("GQ: division by zero");
    Q r = (re * o.re + im * o.im) / den;
    Q s = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(s);
    return *this;
  }

  friend GQ operator+(GQ a, const GQ& b) { return a += b; }
  friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
  friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
  friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
  friend GQ operator-(const GQ& a) { return GQ(-a.re, -a.im); }
  friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  std::string str() const {
    if (sgn(im) == 0) return re.get_str();
    if (sgn(re) == 0) return im.get_str() + "i";
    return "(" + re.get_str() + (sgn(im) > 0 ? "+" : "") + im.get_str() + "i)";
  }
};

/// Canonicalized a/b.
inline Q qfrac(long a, long b) {
  Q q(a, b);
  q.canonicalize();
  return q;
}

inline Q qpow(const Q& b, long e) {
  Q r(1);
  if (e < 0) return Q(1) / qpow(b, -e);
  for (long k = 0; k < e; ++k) r *= b;
  return r;
}

inline GQ gpow(const GQ& b, long e) {
  GQ r(1);
  if (e < 0) return GQ(1) / gpow(b, -e);
  for (long k = 0; k < e; ++k) r *= b;
  return r;
}

/// Rising factorial (a)_k over Q.
inline Q pochhammer(const Q& a, long k) {
  Q r(1);
  for (long j = 0; j < k; ++j) r *= a + j;
  return r;
}

inline Q factorial_q(long k) {
  Q r(1);
  for (long j = 2; j <= k; ++j) r *= j;
  return r;
}

inline Q binomial_q(long n, long k) {
  if (k < 0 || k > n) return Q(0);
  return factorial_q(n) / (factorial_q(k) * factorial_q(n - k));
}

/// Exact rational from a decimal literal such as "2.5", "-0.125", "3/4" or "1e-2".
Q parse_rational(const std::string& s);

}  // namespace jf
