/**
 * @file test_poly.cpp
 * @brief Exact polynomials, the Bessel operator, normal forms and the Fischer product.
 */
#include "jf/poly.hpp"
#include "jf/specialfn.hpp"

#include <doctest.h>

#include <string>

using namespace jf;

TEST_CASE("polynomial arithmetic and evaluation") {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly p = (x + y).pow(3);
  CHECK(p.coeff({2, 1}) == GQ(3));
  CHECK(p.degree() == 3);
  CHECK(p.is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK(p.diff(0) == (x + y).pow(2) * GQ(3));
  CHECK(p.eval(Vec<GQ>{GQ(1), GQ(Q(0), Q(1))}) == GQ(Q(-2), Q(2)));
  MPoly q = x * GQ(Q(0), Q(1));
  CHECK(q.conj() == x * GQ(Q(0), Q(-1)));
}

TEST_CASE("rank one: B x^n = n (n + lambda - 1) x^{n-1}") {
  Algebra A = Algebra::rank1(Q(5, 2));
  BesselOp B(A);
  for (int n = 0; n <= 6; ++n) {
    MPoly out = B.trace_part(MPoly::monomial({n}));
    MPoly expect = n ? MPoly::monomial({n - 1}, GQ(Q(n) * (Q(n) + A.lambda() - 1))) : MPoly(1);
    CHECK(out == expect);
  }
}

TEST_CASE("B_e e^{-tr} = (tr - r lambda) e^{-tr}") {
  for (std::string d : {"rank1:1/2", "minkowski:4", "symmat:3"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    BesselOp B(A);
    WeightedFn out = weighted_bessel_pair(B, Algebra::cast<GQ>(A.unit()), WeightedFn{MPoly::constant(A.dim(), GQ(1)), Q(-1)});
    CHECK(out.s == Q(-1));
    CHECK(normal_form(A, out.p - trace_poly(A) + MPoly::constant(A.dim(), GQ(A.r_lambda()))).is_zero());
  }
}

TEST_CASE("Bessel-Fischer norms of z^m in rank one") {
  Algebra A = Algebra::rank1(Q(1, 2));
  BesselOp B(A);
  for (int m = 0; m <= 5; ++m)
    CHECK(fischer_inner(B, MPoly::monomial({m}), MPoly::monomial({m})) ==
          GQ(qpow(Q(4), m) * factorial_q(m) * pochhammer(A.lambda(), m)));
  CHECK(fischer_inner(B, MPoly::monomial({2}), MPoly::monomial({3})).is_zero());
}

TEST_CASE("Fischer product is sesquilinear and Hermitian") {
  Algebra A = Algebra::minkowski(3);
  BesselOp B(A);
  MPoly p = MPoly::monomial({1, 1, 0}, GQ(Q(2), Q(1))) + MPoly::monomial({0, 0, 2});
  MPoly q = MPoly::monomial({1, 0, 1}, GQ(Q(0), Q(3))) + MPoly::monomial({2, 0, 0});
  GQ pq = fischer_inner(B, p, q), qp = fischer_inner(B, q, p);
  CHECK(pq == qp.conj());
  CHECK(fischer_inner(B, p * GQ(Q(0), Q(1)), q) == pq * GQ(Q(0), Q(1)));
  CHECK(fischer_inner(B, p, q * GQ(Q(0), Q(1))) == pq * GQ(Q(0), Q(-1)));
  CHECK(fischer_inner(B, p, p).im == 0);
  CHECK(fischer_inner(B, p, p).re > 0);
}

TEST_CASE("Minkowski normal form eliminates z_0^2") {
  Algebra A = Algebra::minkowski(4);
  MPoly z0 = MPoly::variable(4, 0);
  MPoly rel = z0 * z0;
  for (int j = 1; j < 4; ++j) rel -= MPoly::variable(4, j) * MPoly::variable(4, j);
  CHECK(normal_form(A, rel).is_zero());
  CHECK(normal_form(A, rel * MPoly::variable(4, 2)).is_zero());
  MPoly nf = normal_form(A, z0.pow(3));
  for (const auto& [m, c] : nf.terms()) CHECK(m[0] <= 1);
  CHECK(orbit_monomials(A, 3).size() == 16u);
}

TEST_CASE("Sym(k) normal forms pull back through the folding map") {
  Algebra A = Algebra::symmat(2);
  CHECK(normal_form_nvars(A) == 2);
  // det of a rank-one matrix vanishes: x11 x22 - x12^2 with x12 the raw coordinate of E12 + E21.
  MPoly det = MPoly::variable(3, 0) * MPoly::variable(3, 1) - MPoly::variable(3, 2) * MPoly::variable(3, 2);
  CHECK(normal_form(A, det).is_zero());
  CHECK_FALSE(normal_form(A, MPoly::variable(3, 2)).is_zero());
  CHECK(orbit_monomials(A, 2).size() == 5u);
}

TEST_CASE("Euler operator scales homogeneous parts by degree") {
  MPoly p = MPoly::monomial({2, 1}) + MPoly::monomial({1, 0}, GQ(Q(3)));
  CHECK(euler_apply(p) == MPoly::monomial({2, 1}, GQ(3)) + MPoly::monomial({1, 0}, GQ(Q(3))));
}
