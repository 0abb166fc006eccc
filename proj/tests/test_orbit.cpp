/**
 * @file test_orbit.cpp
 * @brief Quadrature rules on the minimal orbit and their building blocks.
 */
#include "jf/orbit.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <string>

using namespace jf;

TEST_CASE("Gauss-Laguerre moments") {
  for (double a : {-0.5, 0.0, 1.5}) {
    LaguerreRule g = gauss_laguerre(20, a);
    for (int k = 0; k <= 10; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < g.u.size(); ++i) s += std::exp(g.log_w[i]) * std::pow(g.u[i], k);
      CHECK(s == doctest::Approx(std::tgamma(a + 1 + k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("Gauss-Legendre and Gegenbauer rules integrate polynomials exactly") {
  Rule1D l = gauss_legendre(6, 0.0, 2.0);
  double s = 0;
  for (std::size_t i = 0; i < l.x.size(); ++i) s += l.w[i] * std::pow(l.x[i], 11);
  CHECK(s == doctest::Approx(std::pow(2.0, 12) / 12).epsilon(1e-13));
  Rule1D g = gauss_gegenbauer(5, 0.5);
  double m0 = 0, m2 = 0;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    m0 += g.w[i];
    m2 += g.w[i] * g.x[i] * g.x[i];
  }
  // Normalized weight: mass 1 and second moment (pi/8)/(pi/2).
  CHECK(m0 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m2 == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("sphere rules are normalized and reproduce second moments") {
  for (int m : {1, 2, 3}) {
    SphereRule s = sphere_rule(m, 6);
    double w = std::accumulate(s.weights.begin(), s.weights.end(), 0.0);
    CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
    double x02 = 0, x0x1 = 0;
    for (std::size_t i = 0; i < s.weights.size(); ++i) {
      x02 += s.weights[i] * s.points[i][0] * s.points[i][0];
      x0x1 += s.weights[i] * s.points[i][0] * s.points[i][1];
    }
    CHECK(x02 == doctest::Approx(1.0 / (m + 1)).epsilon(1e-13));
    CHECK(std::abs(x0x1) < 1e-14);
  }
}

TEST_CASE("quadrature nodes lie on the real minimal orbit with tr = t") {
  for (std::string d : {"rank1:1", "minkowski:4", "symmat:3"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    Quadrature q = xi_quadrature(A, 6, 4);
    REQUIRE(q.size() > 0);
    CHECK(q.algebra == A.descriptor());
    for (std::size_t i = 0; i < q.size(); ++i) {
      CHECK(A.in_xi(q.nodes[i]));
      CHECK(A.trace(q.nodes[i]) == doctest::Approx(q.radii[i]).epsilon(1e-12));
      CHECK(q.weights[i] > 0);
    }
  }
}

TEST_CASE("radial moments of e^{-2 tr} under the orbit measure") {
  for (std::string d : {"rank1:1/2", "minkowski:3", "minkowski:5", "symmat:2"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    Quadrature q = xi_quadrature(A, 12, 4);
    double rl = A.r_lambda_d();
    for (int k = 0; k <= 4; ++k) {
      double s = q.integrate([&](const Vec<double>& x) { return std::pow(A.trace(x), k) * std::exp(-2 * A.trace(x)); });
      CHECK(s == doctest::Approx(pochhammer_d(rl, k) / std::pow(2.0, k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("folding map and random complex orbit points") {
  Algebra S = Algebra::symmat(3);
  Vec<double> x = folding_map(S, std::vector<double>{0.3, -1.2, 0.5});
  CHECK(S.in_xi(x));
  CHECK(S.trace(x) == doctest::Approx(0.09 + 1.44 + 0.25));
  std::mt19937_64 rng(7);
  for (std::string d : {"minkowski:4", "symmat:3"}) {
    Algebra A = Algebra::parse(d);
    for (int i = 0; i < 5; ++i) CHECK(A.in_min_orbit(random_xc_point(A, rng, 1.5)));
  }
  CHECK_THROWS(folding_map(Algebra::minkowski(3), std::vector<double>{1.0, 2.0}));
}

TEST_CASE("rank-one Fock rule has unit mass") {
  FockQuadrature f = fock_quadrature_rank1(1.5, 16, 60.0, 16);
  double w = std::accumulate(f.weights.begin(), f.weights.end(), 0.0);
  CHECK(w == doctest::Approx(1.0).epsilon(1e-10));
}
