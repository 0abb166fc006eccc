/**
 * @file test_jordan.cpp
 * @brief Structure constants, invariants and parsing of the implemented Jordan algebras.
 */
#include "jf/jordan.hpp"

#include <doctest.h>

#include <string>

using namespace jf;

TEST_CASE("structural invariants (r, n, d, lambda)") {
  struct Row {
    const char* desc;
    int r, n;
    Q d, lambda;
  };
  for (const Row& row : {Row{"minkowski:3", 2, 3, Q(1), Q(1, 2)}, Row{"minkowski:5", 2, 5, Q(3), Q(3, 2)},
                         Row{"symmat:2", 2, 3, Q(1), Q(1, 2)}, Row{"symmat:3", 3, 6, Q(1), Q(1, 2)}}) {
    CAPTURE(row.desc);
    Algebra A = Algebra::parse(row.desc);
    CHECK(A.rank() == row.r);
    CHECK(A.dim() == row.n);
    CHECK(A.multiplicity() == row.d);
    CHECK(A.lambda() == row.lambda);
    CHECK(A.lambda() * 2 == A.multiplicity());
  }
  Algebra R = Algebra::parse("rank1:5/2");
  CHECK(R.rank() == 1);
  CHECK(R.dim() == 1);
  CHECK(R.lambda() == Q(5, 2));
  CHECK(Algebra::parse("rank1:0.5").lambda() == Q(1, 2));
}

TEST_CASE("parsing rejects malformed descriptors") {
  CHECK_THROWS_AS(Algebra::parse("minkowski"), std::invalid_argument);
  CHECK_THROWS_AS(Algebra::parse("minkowski:2"), std::invalid_argument);
  CHECK_THROWS_AS(Algebra::parse("symmat:1"), std::invalid_argument);
  CHECK_THROWS_AS(Algebra::parse("symmat:2x"), std::invalid_argument);
  CHECK_THROWS_AS(Algebra::parse("herm:3"), std::invalid_argument);
  CHECK_THROWS(Algebra::parse("rank1:-1"));
  CHECK_THROWS(Algebra::parse("rank1:0"));
}

TEST_CASE("trace form: tr e = r and (x0|x0) = 2") {
  for (std::string d : {"minkowski:3", "minkowski:4", "symmat:2", "symmat:3"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    CHECK(A.trace(A.unit()) == Q(A.rank()));
    Vec<Q> x0 = A.offdiag_unit();
    CHECK(A.trace_form(x0, x0) == Q(2));
    for (const auto& c : A.jordan_frame()) CHECK(A.trace(c) == Q(1));
  }
}

TEST_CASE("Minkowski product and Sym(k) product on explicit elements") {
  Algebra M = Algebra::minkowski(3);
  // (x1, x')(y1, y') = (x1 y1 + x'.y', x1 y' + y1 x').
  Vec<Q> x = {Q(1), Q(2), Q(-1)}, y = {Q(3), Q(1, 2), Q(4)};
  Vec<Q> xy = M.product(x, y);
  CHECK(xy == Vec<Q>{Q(3) + Q(1) - Q(4), Q(1, 2) + Q(6), Q(4) - Q(3)});
  Algebra S = Algebra::symmat(2);
  // c1 = diag(1,0) is idempotent, and c1 o (E12 + E21) = (E12 + E21)/2.
  Vec<Q> c1 = S.jordan_frame()[0];
  CHECK(S.product(c1, c1) == c1);
  Vec<Q> off(3, Q(0));
  off[S.sym_index(0, 1)] = 1;
  Vec<Q> half(3, Q(0));
  half[S.sym_index(0, 1)] = Q(1, 2);
  CHECK(S.product(c1, off) == half);
}

TEST_CASE("unit element and rank-one membership") {
  Algebra A = Algebra::symmat(3);
  Vec<Q> x = {Q(1), Q(-2), Q(3), Q(1, 2), Q(0), Q(5)};
  CHECK(A.product(A.unit(), x) == x);
  Algebra M = Algebra::minkowski(4);
  CHECK(M.in_xi({1.0, 0.6, 0.8, 0.0}));
  CHECK_FALSE(M.in_xi({1.0, 0.6, 0.0, 0.0}));
  CHECK_FALSE(M.in_xi({-1.0, 0.6, 0.8, 0.0}));
  CHECK(M.in_min_orbit(Vec<GQ>{GQ(1), GQ(Q(0), Q(1)), GQ(Q(0)), GQ(Q(0), Q(0))}) == false);
  CHECK(M.in_min_orbit(Vec<GQ>{GQ(Q(5)), GQ(Q(3)), GQ(Q(0), Q(4)), GQ(Q(0))}) == false);
  CHECK(M.in_min_orbit(Vec<GQ>{GQ(Q(5)), GQ(Q(3)), GQ(Q(4)), GQ(Q(0))}));
  CHECK_THROWS_AS(M.trace(Vec<double>{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("L(x) is self-adjoint for the trace form") {
  for (std::string d : {"minkowski:4", "symmat:3"}) {
    Algebra A = Algebra::parse(d);
    Vec<Q> x(A.dim());
    for (int a = 0; a < A.dim(); ++a) x[a] = Q(a + 1) / 3;
    Mat<Q> L = A.lmat(x);
    CHECK(A.adjoint(L) == L);
  }
}
