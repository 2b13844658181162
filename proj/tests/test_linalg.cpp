#include <catch2/catch_amalgamated.hpp>

#include "catdiv/fields.hpp"
#include "catdiv/matrix.hpp"
#include "catdiv/snf.hpp"
#include "support.hpp"

using namespace catdiv;

TEST_CASE("prime field arithmetic") {
  PrimeField F7(7);
  for (Int a = 1; a < 7; ++a) {
    REQUIRE(F7.mul(a, F7.inv(a)) == F7.one());
    REQUIRE(F7.add(a, F7.neg(a)) == F7.zero());
  }
  REQUIRE(F7.from_int(-3) == 4);
  REQUIRE_THROWS_AS(F7.inv(0), std::domain_error);
  REQUIRE_THROWS_AS(PrimeField(6), std::invalid_argument);
}

TEST_CASE("exact matrix rank and inverse") {
  tests::Rng rng(61);
  SECTION("inverse round trips over the rationals") {
    for (int iter = 0; iter < 50; ++iter) {
      int n = rng.range(1, 5);
      Matrix<RationalField> m(RationalField{}, n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = Rat(rng.range(-5, 5), 1 + rng.range(0, 2));
      auto inv = m.inverse();
      REQUIRE(inv.has_value() == (m.rank() == n));
      if (inv)
        REQUIRE(m * *inv == Matrix<RationalField>::identity(RationalField{}, n));
    }
  }
  SECTION("rank over a prime field sees the characteristic") {
    PrimeField F3(3);
    auto m = Matrix<PrimeField>::scalar(F3, 4, F3.from_int(3));
    REQUIRE(m.rank() == 0);
    REQUIRE(Matrix<PrimeField>::scalar(F3, 4, F3.from_int(2)).rank() == 4);
  }
  SECTION("a rank-one product") {
    Matrix<RationalField> col(RationalField{}, 3, 1), row(RationalField{}, 1, 3);
    for (int i = 0; i < 3; ++i) {
      col.at(i, 0) = Rat(i + 1);
      row.at(0, i) = Rat(i - 1);
    }
    REQUIRE((col * row).rank() == 1);
  }
}

TEST_CASE("smith normal form") {
  SECTION("detects torsion") {
    // Z^2 / <(2,0),(0,3)> is cyclic of order six
    auto r = smith_normal_form({{2, 0}, {0, 3}}, 2);
    REQUIRE(r.diagonal == std::vector<Int>{1, 6});
    REQUIRE(r.has_torsion());
    REQUIRE(r.torsion_free_rank(2) == 0);
  }
  SECTION("handles a zero matrix") {
    auto r = smith_normal_form({{0, 0, 0}}, 3);
    REQUIRE(r.diagonal == std::vector<Int>{0});
    REQUIRE(r.torsion_free_rank(3) == 3);
  }
  SECTION("the tracked basis change really inverts the column transform") {
    // for random small matrices, the reported presentation must describe
    // the same quotient: check rank and divisor product via determinants
    tests::Rng rng(67);
    for (int iter = 0; iter < 100; ++iter) {
      IntMatrix a(2, std::vector<Int>(2));
      for (auto& row : a)
        for (auto& v : row) v = rng.range(-4, 4);
      Int det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
      auto r = smith_normal_form(a, 2);
      // |det| equals the product of the invariant factors (0 when singular)
      Int prod = 1;
      for (const auto& d : r.diagonal) prod *= d;
      REQUIRE(boost::multiprecision::abs(det) == boost::multiprecision::abs(prod));
      // the new basis must be unimodular
      Int wdet = r.new_basis[0][0] * r.new_basis[1][1] -
                 r.new_basis[0][1] * r.new_basis[1][0];
      REQUIRE(boost::multiprecision::abs(wdet) == 1);
      // divisibility chain
      if (r.diagonal[0] != 0 && r.diagonal[1] != 0)
        REQUIRE(r.diagonal[1] % r.diagonal[0] == 0);
    }
  }
}
