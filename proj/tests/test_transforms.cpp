/**
 * @file test_transforms.cpp
 * @brief Kernels, Hermite functions, Segal-Bargmann transform, inversion and the sl(2) model.
 */
#include "jf/transforms.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace jf;

TEST_CASE("reproducing kernel is the sum of its homogeneous parts") {
  std::mt19937_64 rng(3);
  for (std::string d : {"rank1:5/2", "minkowski:4", "symmat:2"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    Vec<cplx> z = random_xc_point(A, rng, 2.0), w = random_xc_point(A, rng, 1.5);
    cplx s = 0;
    for (int m = 0; m <= 40; ++m) s += repro_kernel_m(A, m, z, w);
    CHECK(std::abs(s - repro_kernel(A, z, w)) < 1e-13 * std::abs(s));
  }
}

TEST_CASE("rank-one Hermite functions are Laguerre functions") {
  Algebra A = Algebra::rank1(Q(3, 2));
  BesselOp B(A);
  for (int k = 0; k <= 4; ++k) {
    WeightedFn h = hermite_function(B, {k});
    CHECK(h.s == Q(-1));
    for (const Q& x : {Q(0), Q(1, 3), Q(2)}) {
      Q expect = qpow(Q(-2), k) * factorial_q(k) * laguerre<Q>(k, A.lambda() - 1, Q(2 * x));
      CHECK(h.p.eval(Vec<GQ>{GQ(x)}) == GQ(expect));
    }
  }
}

TEST_CASE("multi-indices are graded and complete") {
  std::vector<Mono> m = multi_indices(2, 2);
  CHECK(m.size() == 6u);
  CHECK(m.front() == Mono{0, 0});
  CHECK(multi_indices(3, 3).size() == 20u);
}

TEST_CASE("Segal-Bargmann transform maps e^{-tr} to 1 and Hermite functions to monomials") {
  std::mt19937_64 rng(11);
  for (std::string d : {"rank1:1", "minkowski:3", "symmat:2"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    BesselOp B(A);
    Quadrature q = xi_quadrature(A, 12, 10);
    Vec<cplx> z = random_xc_point(A, rng, 1.0);
    std::vector<cplx> f0 = sample(q, WeightedFn{MPoly::constant(A.dim(), GQ(1)), Q(-1)}, A);
    CHECK(std::abs(segal_bargmann_numeric(A, q, f0, z) - 1.0) < 1e-10);
    Mono a(A.dim(), 0);
    a[0] = 1;
    std::vector<cplx> f1 = sample(q, hermite_function(B, a), A);
    CHECK(std::abs(segal_bargmann_numeric(A, q, f1, z) - z[0]) < 1e-9);
  }
}

TEST_CASE("unitary inversion acts by parity on Hermite coefficients") {
  std::map<Mono, GQ> c = {{{0, 0}, GQ(2)}, {{1, 0}, GQ(Q(0), Q(1))}, {{1, 1}, GQ(5)}};
  std::map<Mono, GQ> out = unitary_inversion_exact(c);
  CHECK(out.at({0, 0}) == GQ(2));
  CHECK(out.at({1, 0}) == GQ(Q(0), Q(-1)));
  CHECK(out.at({1, 1}) == GQ(5));
}

TEST_CASE("unitary inversion of e^{-tr} is e^{-tr}") {
  Algebra A = Algebra::rank1(Q(1));
  Quadrature q = xi_quadrature(A, 40, 1);
  std::vector<cplx> f(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) f[i] = std::exp(-q.radii[i]);
  for (double x : {0.2, 1.0, 3.0}) CHECK(std::abs(unitary_inversion_numeric(A, q, f, {x}) - std::exp(-x)) < 1e-10);
}

TEST_CASE("Cayley transform round trip") {
  for (std::string d : {"rank1:1/2", "minkowski:4", "symmat:3"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    for (const GTriple& X : {triple_E(A), triple_H(A), triple_F(A)}) {
      GTriple Y = cayley_transform(A, X, CayleyDirection::Forward);
      CHECK(triple_equal(cayley_transform(A, Y, CayleyDirection::Inverse), X));
    }
  }
}

TEST_CASE("sl(2) ladder on the radial model") {
  Algebra A = Algebra::minkowski(5);
  Sl2Model M = sl2_model(A, 1);
  CHECK(M.s == A.r_lambda() + 2);
  CHECK(M.mu == A.r_lambda() - 1);
  for (int k = 0; k <= 3; ++k) {
    auto [re, im] = M.apply(Sl2Element::ht, M.phi(k));
    CHECK(im == RadialFn{});
    CHECK(re == M.phi(k).scaled(M.s + 2 * k));
    auto [re2, im2] = M.apply(Sl2Element::et, M.phi(k));
    CHECK(re2 == RadialFn{});
    CHECK(im2 == M.phi(k + 1).scaled(Q(2)));
  }
  CHECK(M.phi(0)(1.0) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("folding fit recovers an exact scalar") {
  std::vector<cplx> rhs = {{1, 2}, {-0.5, 0.25}, {3, 0}};
  std::vector<cplx> lhs;
  for (cplx v : rhs) lhs.push_back(v * cplx(0.75, -0.1));
  FoldingReport f = folding_fit(lhs, rhs);
  CHECK(std::abs(f.scalar - cplx(0.75, -0.1)) < 1e-14);
  CHECK(f.residual < 1e-14);
}
