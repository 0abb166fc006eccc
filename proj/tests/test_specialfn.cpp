/**
 * @file test_specialfn.cpp
 * @brief Renormalized Bessel functions, kernels, moments and terminating polynomials.
 *
 * Reference values were computed with mpmath at 30 digits.
 */
#include "jf/specialfn.hpp"

#include <doctest.h>

#include <cmath>

using namespace jf;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("I~ matches reference values in every regime") {
  struct Row {
    double a, z, v;
  };
  for (Row r : {Row{0, 1, 1.2660658777520083356}, Row{0.5, 3, 3.7679871222192678639},
                Row{-0.5, 2, 2.1225916201776371938}, Row{1.5, 10, 223.68784671192788561},
                Row{0.25, 25, 3067165541.7936653143}}) {
    CAPTURE(r.a);
    CAPTURE(r.z);
    CHECK(rel(bessel_tilde(BesselKind::I, r.a, r.z).real(), r.v) < 1e-12);
  }
}

TEST_CASE("J~ matches reference values below and above the Hankel switch") {
  struct Row {
    double a, z, v;
  };
  for (Row r : {Row{0, 1, 0.76519768655796655145}, Row{0.5, 3, 0.053078959051701665801},
                Row{1.5, 10, 0.017708092486281466385}, Row{0, 25, 0.096266783275958116174},
                Row{1, 40, 0.0063019159018792499603}}) {
    CAPTURE(r.a);
    CAPTURE(r.z);
    CHECK(rel(bessel_tilde(BesselKind::J, r.a, r.z).real(), r.v) < 1e-10);
  }
}

TEST_CASE("K~ matches reference values across series, trapezoid and asymptotic regimes") {
  struct Row {
    double a, x, v;
  };
  for (Row r : {Row{0, 0.5, 0.92441907122766586178}, Row{0.5, 1, 0.65204933217329218306},
                Row{1.5, 2.5, 0.065180358616801524707}, Row{0.25, 5, 0.0029522856991068751036},
                Row{-0.5, 10, 0.000040234640169178112355}, Row{1, 35, 7.7138161942920324925e-18},
                Row{2.5, 0.1, 2123408.1174386021871}}) {
    CAPTURE(r.a);
    CAPTURE(r.x);
    CHECK(rel(k_tilde(r.a, r.x), r.v) < 1e-11);
  }
}

TEST_CASE("K~ rejects non-positive arguments") {
  CHECK_THROWS(k_tilde(0.5, 0.0));
  CHECK_THROWS(k_tilde(0.5, -1.0));
}

TEST_CASE("kernel B: value at zero, both signs of the argument and the log form") {
  CHECK(kernel_B(1.0, 0.0) == cplx(1.0, 0.0));
  CHECK(kernel_B(2.5, 0.0).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel(kernel_B(1.0, 1.0).real(), 2.2795853023360672674) < 1e-13);
  CHECK(rel(kernel_B(0.5, 4.0).real(), 27.308232836016486629) < 1e-13);
  CHECK(rel(kernel_B(2.5, -3.0).real(), 0.21423710771131335864) < 1e-12);
  CHECK(rel(kernel_B(1.0, 400.0).real(), 14894774793419899.924) < 1e-12);
  CHECK(log_kernel_B(1.0, 400.0) == doctest::Approx(37.239786861352356849).epsilon(1e-13));
  CHECK(log_kernel_B(1.5, 2500.0) == doctest::Approx(94.701682633451963323).epsilon(1e-13));
  CHECK(log_kernel_B(1.0, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("kernel F is 2^{-r lambda} B(-t)") {
  for (double t : {0.0, 0.7, 5.0, 30.0}) {
    cplx f = kernel_F(2.0, 1.0, t);
    cplx b = kernel_B(1.0, -t) * 0.25;
    CHECK(std::abs(f - b) <= 1e-15 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("K-Bessel moment closed form matches reference quadrature") {
  struct Row {
    double a, b, s, v;
  };
  for (Row r : {Row{0.5, 2, 1, 1.7724538509055160273}, Row{0, 1, 2, 0.25}, Row{1, 3.5, 1.5, 0.93695019052333872134},
                Row{-0.5, 0.5, 1, 0.78539816339744830962}}) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    CHECK(rel(k_bessel_moment(r.a, r.b, r.s), r.v) < 1e-13);
  }
}

TEST_CASE("Fock normalization constant equals the K-Bessel moment in closed form") {
  for (int r : {1, 2, 3}) {
    for (const Q& lam : {Q(1, 2), Q(1), Q(5, 2)}) {
      GammaProduct a = fock_normalization_symbolic(r, lam);
      GammaProduct b = k_bessel_moment_symbolic(Q(lam - 1), Q(2 * r * lam - 1));
      CHECK(a == b);
      CHECK(rel(a.value(), fock_normalization(r, lam.get_d())) < 1e-13);
    }
  }
  // c_{2,1/2} = 2^0 Gamma(1) Gamma(3/2) = sqrt(pi)/2.
  CHECK(fock_normalization(2, 0.5) == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-14));
}

TEST_CASE("terminating polynomials: exact values") {
  // 2F1(-2, 3; 1/2; 1/3) = 1 - 4 + 16/9.
  CHECK(hyp2f1_terminating<Q>(2, Q(3), Q(1, 2), Q(1, 3)) == Q(-11, 9));
  // L_2^a(x) = ((a+1)(a+2) - 2(a+2)x + x^2)/2.
  CHECK(laguerre<Q>(2, Q(1, 2), Q(3)) == (Q(3, 2) * Q(5, 2) - 2 * Q(5, 2) * 3 + 9) / 2);
  // C_2^a(x) = 2a(a+1)x^2 - a.
  CHECK(gegenbauer<Q>(2, Q(3, 4), Q(2, 5)) == 2 * Q(3, 4) * Q(7, 4) * Q(4, 25) - Q(3, 4));
  CHECK_THROWS_AS(hyp2f1_terminating<Q>(-1, Q(1), Q(1), Q(1)), Unsupported);
}

TEST_CASE("2F1 as a Gegenbauer polynomial holds exactly at rational points") {
  for (long n = 0; n <= 5; ++n)
    for (const Q& b : {Q(7, 3), Q(-5, 3), Q(13, 4), Q(11, 5)})
      for (const Q& z : {Q(1, 3), Q(-2, 5), Q(2)}) {
        Q lhs = hyp2f1_terminating<Q>(n, b, Q(1, 2), Q(z * z));
        Q rhs = gegenbauer_chain_constant(n, b) * gegenbauer<Q>(2 * n, Q(b - n), z);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("renormalized Bessel relations") {
  for (double a : {-0.5, 0.0, 1.5})
    for (double z : {0.5, 4.0, 15.0}) {
      cplx i = bessel_tilde(BesselKind::I, a, z);
      CHECK(std::abs(bessel_tilde(BesselKind::J, a, cplx(0, z)) - i) < 1e-12 * std::abs(i));
      CHECK(bessel_tilde(BesselKind::I, a, -z) == i);
    }
  CHECK(bessel_tilde_sq(BesselKind::I, 0.5, 4.0).real() ==
        doctest::Approx(bessel_tilde(BesselKind::I, 0.5, 4.0).real()).epsilon(1e-14));
}

TEST_CASE("gamma helpers") {
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(rgamma(-2.0) == 0.0);
  CHECK(pochhammer_d(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
  CHECK(digamma_int(1) == doctest::Approx(-0.57721566490153286061));
}
