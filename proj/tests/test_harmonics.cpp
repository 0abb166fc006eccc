/**
 * @file test_harmonics.cpp
 * @brief Dimensions and explicit bases of harmonic polynomials on the minimal orbit.
 */
#include "jf/harmonics.hpp"

#include <doctest.h>

#include <string>

using namespace jf;

TEST_CASE("d_m for Minkowski equals the classical harmonic dimension") {
  for (int n : {3, 4, 5})
    for (int m = 0; m <= 5; ++m) {
      Algebra A = Algebra::minkowski(n);
      CHECK(dim_orbit_polys(A, m) == Q(classical_harmonic_dim(n, m)));
      CHECK(orbit_monomials(A, m).size() == static_cast<std::size_t>(classical_harmonic_dim(n, m)));
    }
  CHECK(classical_harmonic_dim(3, 4) == 9);
}

TEST_CASE("Minkowski 3 and Sym(2): d_m = 2m + 1 and two harmonics per degree") {
  for (std::string d : {"minkowski:3", "symmat:2"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    CHECK(dim_orbit_polys(A, -1) == 0);
    CHECK(dim_harmonic(A, 0) == 1);
    for (int m = 1; m <= 4; ++m) {
      CHECK(dim_orbit_polys(A, m) == Q(2 * m + 1));
      CHECK(dim_harmonic(A, m) == 2);
    }
  }
  CHECK(dim_orbit_polys(Algebra::symmat(3), 2) == 15);
}

TEST_CASE("harmonic bases are annihilated by B_e and have the right size") {
  for (std::string d : {"minkowski:4", "symmat:2", "symmat:3"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    BesselOp B(A);
    for (int m = 0; m <= 3; ++m) {
      HarmonicBasis h = harmonic_basis(B, m);
      CHECK(Q(static_cast<long>(h.basis.size())) == dim_harmonic(A, m));
      for (const auto& p : h.basis) {
        CHECK(p.is_homogeneous());
        CHECK(normal_form(A, B.trace_part(p)).is_zero());
      }
    }
  }
}

TEST_CASE("spherical and highest weight vectors are harmonic") {
  for (std::string d : {"minkowski:3", "minkowski:5", "symmat:3"}) {
    CAPTURE(d);
    Algebra A = Algebra::parse(d);
    BesselOp B(A);
    for (int m = 1; m <= 3; ++m) {
      CHECK(normal_form(A, B.trace_part(spherical_vector(A, m))).is_zero());
      MPoly hw = highest_weight_vector(A, m);
      CHECK_FALSE(normal_form(A, hw).is_zero());
      CHECK(normal_form(A, B.trace_part(hw)).is_zero());
    }
  }
  CHECK_THROWS(spherical_vector(Algebra::rank1(Q(1)), 2));
}

TEST_CASE("harmonic decomposition reconstructs the polynomial on the orbit") {
  Algebra A = Algebra::symmat(3);
  BesselOp B(A);
  MPoly p = MPoly::monomial({2, 0, 0, 0, 1, 0}, GQ(Q(3))) + MPoly::monomial({0, 1, 1, 1, 0, 0}, GQ(Q(0), Q(1))) +
            MPoly::monomial({0, 0, 0, 0, 0, 3});
  std::vector<MPoly> parts = harmonic_decompose(B, p);
  REQUIRE(parts.size() == 4u);
  MPoly sum(A.dim()), trk = MPoly::constant(A.dim(), GQ(1));
  for (const auto& h : parts) {
    CHECK(normal_form(A, B.trace_part(h)).is_zero());
    sum += trk * h;
    trk = trk * trace_poly(A);
  }
  CHECK(normal_form(A, sum - p).is_zero());
}
