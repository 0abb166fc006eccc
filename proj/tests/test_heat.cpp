/**
 * @file test_heat.cpp
 * @brief Heat kernel of the Bessel operator and its integral operators.
 */
#include "jf/heat.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace jf;

TEST_CASE("heat kernel is positive and symmetric") {
  for (std::string d : {"rank1:1/2", "minkowski:4", "symmat:3"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    Quadrature q = xi_quadrature(A, 3, 3);
    for (double t : {0.3, 1.0, 4.0})
      for (std::size_t i = 0; i < q.size(); i += 3)
        for (std::size_t j = 0; j < q.size(); j += 5) {
          double g = heat_kernel(A, t, q.nodes[i], q.nodes[j]);
          CHECK(g > 0);
          CHECK(g == doctest::Approx(heat_kernel(A, t, q.nodes[j], q.nodes[i])).epsilon(1e-13));
          CHECK(std::log(g) == doctest::Approx(log_heat_kernel(A, t, q.nodes[i], q.nodes[j])).epsilon(1e-12));
        }
  }
}

TEST_CASE("heat kernel rejects non-positive times") {
  Algebra A = Algebra::rank1(Q(1));
  CHECK_THROWS_AS(heat_kernel(A, 0.0, {1.0}, {1.0}), std::domain_error);
  CHECK_THROWS_AS(heat_kernel(A, -1.0, {1.0}, {1.0}), std::domain_error);
}

TEST_CASE("rank-one heat kernel closed form") {
  // Gamma(t,x,y) = (2t)^{-lambda} e^{-(x+y)/t} B(xy/t^2).
  Algebra A = Algebra::rank1(Q(5, 2));
  double t = 0.7, x = 1.3, y = 0.4;
  double expect = std::pow(2 * t, -2.5) * std::exp(-(x + y) / t) * kernel_B(2.5, x * y / (t * t)).real();
  CHECK(heat_kernel(A, t, {x}, {y}) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("semigroup applied to e^{-a tr} matches the closed form") {
  for (std::string d : {"rank1:1", "minkowski:3", "symmat:2"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    double t = 0.5;
    Quadrature q = heat_quadrature(A, t, 30, 16);
    std::vector<double> f(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) f[i] = std::exp(-q.radii[i]);
    for (double tr : {0.5, 2.0}) {
      Vec<double> x = A.kind() == AlgebraKind::SymMat ? folding_map(A, std::vector<double>{std::sqrt(0.6 * tr), std::sqrt(0.4 * tr)})
                                                      : xi_point(A, tr, std::vector<double>(A.dim() - 1, 0.3));
      CHECK(heat_apply(A, t, q, f, x) == doctest::Approx(heat_exponential_oracle(A, 1.0, t, x)).epsilon(1e-12));
      CHECK(heat_exponential_oracle(A, 1.0, 0.0, x) == doctest::Approx(std::exp(-A.trace(x))).epsilon(1e-15));
    }
  }
}

TEST_CASE("heat equation residual is small") {
  Algebra A = Algebra::minkowski(4);
  Quadrature q = xi_quadrature(A, 2, 2);
  HeatPdeReport r = heat_pde_residual(A, 0.8, q.nodes[0], q.nodes[q.size() - 1]);
  CHECK(r.residual < 1e-8);
  CHECK(r.dt == doctest::Approx(r.bessel).epsilon(1e-8));
}

TEST_CASE("an under-resolved rule is rejected") {
  Algebra A = Algebra::rank1(Q(1));
  Quadrature q = xi_quadrature(A, 4, 1);
  std::vector<double> f(q.size(), 1.0);
  CHECK_THROWS_AS(heat_apply(A, 50.0, q, f, {1.0}), std::domain_error);
}
