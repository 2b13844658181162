#include <catch2/catch_amalgamated.hpp>

#include "catdiv/cantor.hpp"
#include "catdiv/clopen.hpp"
#include "support.hpp"

using namespace catdiv;

namespace {

const PrimeSet S2({2});
const PrimeSet S23({2, 3});

CantorPoint pt2(std::vector<int> digits) { return make_point(S2, {std::move(digits)}); }

CantorPoint random_point(tests::Rng& rng, const PrimeSet& S, int depth) {
  std::vector<std::vector<int>> raw(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    int len = rng.range(0, depth);
    for (int k = 0; k < len; ++k)
      raw[i].push_back(rng.range(0, static_cast<int>(S.at(i)) - 1));
  }
  return make_point(S, std::move(raw));
}

TorsionElement random_torsion(tests::Rng& rng, const PrimeSet& S, int den_bound) {
  auto dens = tests::smooth_numbers_up_to(S, den_bound);
  auto d = dens[rng.below(dens.size())].value();
  Int a = rng.range(0, static_cast<int>(d) - 1);
  return TorsionElement::make(S, a, d);
}

Clopen random_clopen(tests::Rng& rng, const PrimeSet& S, int max_depth) {
  std::vector<int> depth(S.size());
  for (auto& d : depth) d = rng.range(0, max_depth);
  std::vector<Prefix> all;
  detail::enumerate_tuples(S, depth, all);
  Clopen u{depth, {}};
  for (auto& t : all)
    if (rng.coin()) u.prefixes.insert(std::move(t));
  return clopen_canonicalize(S, std::move(u));
}

}  // namespace

TEST_CASE("multiplication shifts digits upward") {
  REQUIRE(mult(S2, SmoothNumber::make(S2, 2), pt2({1, 1})) == pt2({0, 1, 1}));
  auto x = pt2({1, 0, 1});
  REQUIRE(mult(S2, SmoothNumber::one(), x) == x);

  auto y = make_point(S23, {{1, 1}, {2}});
  auto shifted = mult(S23, SmoothNumber::make(S23, 6), y);
  REQUIRE(shifted == make_point(S23, {{0, 1, 1}, {0, 2}}));
}

TEST_CASE("the level projection zeroes the leading block") {
  REQUIRE(f_map(S2, SmoothNumber::make(S2, 2), pt2({1, 1})) == pt2({0, 1}));
  auto x = pt2({1, 1, 0, 1});
  REQUIRE(f_map(S2, SmoothNumber::one(), x) == x);

  tests::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto y = random_point(rng, S23, 4);
    auto m = tests::random_smooth(rng, S23, 36);
    REQUIRE(f_map(S23, m, mult(S23, m, y)) == mult(S23, m, y));
    REQUIRE(clopen_member(S23, clopen_mult_image(S23, m), mult(S23, m, y)));
  }
}

TEST_CASE("f-laws compose by joint zeroing") {
  tests::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto x = random_point(rng, S23, 5);
    auto m = tests::random_smooth(rng, S23, 24);
    auto n = tests::random_smooth(rng, S23, 24);
    REQUIRE(f_map(S23, m, f_map(S23, n, x)) == f_map(S23, lcm(m, n), x));
  }
}

TEST_CASE("multiplication is injective onto its clopen image") {
  tests::Rng rng(7);
  auto m = SmoothNumber::make(S23, 12);
  std::set<CantorPoint> images;
  std::set<CantorPoint> inputs;
  for (int i = 0; i < 300; ++i) {
    auto x = random_point(rng, S23, 3);
    if (!inputs.insert(x).second) continue;
    auto y = mult(S23, m, x);
    REQUIRE(images.insert(y).second);
  }
}

TEST_CASE("the action adds on the leading block, most significant first") {
  SECTION("zero acts as the identity") {
    tests::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
      auto x = random_point(rng, S23, 5);
      REQUIRE(act(S23, TorsionElement{}, x) == x);
    }
  }
  SECTION("a half-step flips the first binary digit") {
    auto x = pt2({0, 1});
    REQUIRE(act(S2, TorsionElement::make(S2, 1, 2), x) == pt2({1, 1}));
  }
  SECTION("the projection forgets an action of matching denominator") {
    tests::Rng rng(13);
    for (int i = 0; i < 300; ++i) {
      auto x = random_point(rng, S23, 5);
      auto t = random_torsion(rng, S23, 36);
      auto m = tests::random_smooth(rng, S23, 72);
      if (m.value() % t.den != 0) continue;
      REQUIRE(f_map(S23, m, act(S23, t, x)) == f_map(S23, m, x));
    }
  }
  SECTION("additivity and freeness on a small exhaustive window") {
    std::vector<TorsionElement> ts;
    for (int d : {1, 2, 3, 4, 6, 8, 9, 12})
      for (int a = 0; a < d; ++a) ts.push_back(TorsionElement::reduce(a, d));
    std::vector<CantorPoint> points;
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 9; ++c)
        points.push_back(make_point(
            S23, {{(b >> 2) & 1, (b >> 1) & 1, b & 1}, {c / 3, c % 3}}));
    for (const auto& t : ts)
      for (const auto& u : ts)
        for (const auto& x : points)
          REQUIRE(act(S23, t, act(S23, u, x)) == act(S23, t + u, x));
    for (const auto& t : ts) {
      if (t.is_zero()) continue;
      for (const auto& x : points) REQUIRE(act(S23, t, x) != x);
    }
  }
}

TEST_CASE("the action formula is independent of the representative") {
  for (std::size_t pi : {std::size_t{0}, std::size_t{1}}) {
    Int p = S23.at(pi);
    for (int n = 0; n <= 4; ++n) {
      Int pn = 1;
      for (int k = 0; k < n; ++k) pn *= p;
      for (Int a = 0; a < pn; ++a) {
        tests::Rng rng(static_cast<std::uint64_t>(n * 100 + static_cast<int>(a)));
        for (int i = 0; i < 20; ++i) {
          auto x = random_point(rng, S23, 5);
          REQUIRE(act_raw(S23, pi, a, n, x) == act_raw(S23, pi, a * p, n + 1, x));
        }
      }
    }
  }
}

TEST_CASE("the least-significant encoding is not representation independent") {
  // the same unreduced representatives that agree above must disagree
  // somewhere under the control encoding
  bool found_counterexample = false;
  for (int a = 0; a < 2 && !found_counterexample; ++a)
    for (int b = 0; b < 4; ++b) {
      auto x = pt2({(b >> 1) & 1, b & 1});
      if (act_raw_lsf(S2, 0, 1, 1, x) != act_raw_lsf(S2, 0, 2, 2, x)) {
        found_counterexample = true;
        break;
      }
    }
  REQUIRE(found_counterexample);
}

TEST_CASE("orbit witnesses are solved and verified") {
  SECTION("a point meets itself at level one") {
    auto x = make_point(S23, {{1, 0, 1}, {2}});
    auto w = same_orbit(S23, x, x);
    REQUIRE(w);
    REQUIRE(w->t.is_zero());
  }
  SECTION("zero and the one-digit point differ by a half") {
    auto w = same_orbit(S2, CantorPoint::zero(S2), pt2({1}));
    REQUIRE(w);
    REQUIRE(w->t == (TorsionElement{1, 2}));
    REQUIRE(w->level == SmoothNumber::make(S2, 2));
    REQUIRE(act(S2, w->t, CantorPoint::zero(S2)) == pt2({1}));
  }
  SECTION("random pairs always meet, and the witness verifies") {
    tests::Rng rng(17);
    for (int i = 0; i < 500; ++i) {
      auto x = random_point(rng, S23, 4);
      auto y = random_point(rng, S23, 4);
      auto w = same_orbit(S23, x, y);
      REQUIRE(w);
      REQUIRE(act(S23, w->t, x) == y);
      REQUIRE(f_map(S23, w->level, x) == f_map(S23, w->level, y));
    }
  }
  SECTION("the orbit relation filters along divisibility") {
    tests::Rng rng(19);
    for (int i = 0; i < 300; ++i) {
      auto x = random_point(rng, S23, 4);
      auto y = random_point(rng, S23, 4);
      auto m = tests::random_smooth(rng, S23, 24);
      auto n = lcm(m, tests::random_smooth(rng, S23, 24));
      if (f_map(S23, m, x) == f_map(S23, m, y))
        REQUIRE(f_map(S23, n, x) == f_map(S23, n, y));
    }
  }
}

TEST_CASE("clopen algebra in canonical cylinder form") {
  SECTION("named sets") {
    auto img2 = clopen_mult_image(S2, SmoothNumber::make(S2, 2));
    REQUIRE(img2.depth == std::vector<int>{1});
    REQUIRE(img2.prefixes == std::set<Prefix>{{0}});
    REQUIRE(clopen_member(S2, img2, CantorPoint::zero(S2)));
    REQUIRE_FALSE(clopen_member(S2, img2, pt2({1})));
  }
  SECTION("translation moves cylinders") {
    auto zero_cyl = clopen_mult_image(S2, SmoothNumber::make(S2, 2));
    auto moved = clopen_translate(S2, TorsionElement{1, 2}, zero_cyl);
    REQUIRE(moved.prefixes == std::set<Prefix>{{1}});
  }
  SECTION("double complement is the identity on canonical forms") {
    tests::Rng rng(23);
    for (int i = 0; i < 200; ++i) {
      auto u = random_clopen(rng, S23, 3);
      REQUIRE(clopen_complement(S23, clopen_complement(S23, u)) == u);
    }
  }
  SECTION("boolean axioms hold on random triples") {
    tests::Rng rng(29);
    for (int i = 0; i < 500; ++i) {
      auto a = random_clopen(rng, S23, 2);
      auto b = random_clopen(rng, S23, 2);
      auto c = random_clopen(rng, S23, 2);
      REQUIRE(clopen_union(S23, a, b) == clopen_union(S23, b, a));
      REQUIRE(clopen_intersect(S23, a, b) == clopen_intersect(S23, b, a));
      REQUIRE(clopen_union(S23, a, clopen_union(S23, b, c)) ==
              clopen_union(S23, clopen_union(S23, a, b), c));
      REQUIRE(clopen_intersect(S23, a, clopen_intersect(S23, b, c)) ==
              clopen_intersect(S23, clopen_intersect(S23, a, b), c));
      REQUIRE(clopen_intersect(S23, a, clopen_union(S23, b, c)) ==
              clopen_union(S23, clopen_intersect(S23, a, b),
                           clopen_intersect(S23, a, c)));
      REQUIRE(clopen_union(S23, a, clopen_intersect(S23, b, c)) ==
              clopen_intersect(S23, clopen_union(S23, a, b),
                               clopen_union(S23, a, c)));
      REQUIRE(clopen_union(S23, a, clopen_complement(S23, a)) == clopen_full(S23));
      REQUIRE(clopen_intersect(S23, a, clopen_complement(S23, a)) ==
              clopen_empty(S23));
    }
  }
  SECTION("translation is a boolean-algebra automorphism") {
    tests::Rng rng(31);
    for (int i = 0; i < 300; ++i) {
      auto a = random_clopen(rng, S23, 2);
      auto b = random_clopen(rng, S23, 2);
      auto t = random_torsion(rng, S23, 36);
      REQUIRE(clopen_translate(S23, t, clopen_union(S23, a, b)) ==
              clopen_union(S23, clopen_translate(S23, t, a),
                           clopen_translate(S23, t, b)));
      REQUIRE(clopen_translate(S23, t, clopen_complement(S23, a)) ==
              clopen_complement(S23, clopen_translate(S23, t, a)));
      // inverse translation undoes it
      REQUIRE(clopen_translate(S23, -t, clopen_translate(S23, t, a)) == a);
    }
  }
  SECTION("membership is exact under translation") {
    tests::Rng rng(37);
    for (int i = 0; i < 300; ++i) {
      auto u = random_clopen(rng, S23, 2);
      auto t = random_torsion(rng, S23, 24);
      auto x = random_point(rng, S23, 4);
      REQUIRE(clopen_member(S23, clopen_translate(S23, t, u), act(S23, t, x)) ==
              clopen_member(S23, u, x));
    }
  }
}

TEST_CASE("locally constant functions form a ring over the clopen algebra") {
  SECTION("zero is a unit for addition") {
    tests::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
      auto u = random_clopen(rng, S23, 2);
      auto f = lc_indicator(S23, u);
      REQUIRE(lc_add(S23, f, lc_const(S23, 0)) == f);
    }
  }
  SECTION("indicators multiply to the indicator of the intersection") {
    tests::Rng rng(43);
    for (int i = 0; i < 200; ++i) {
      auto u = random_clopen(rng, S23, 2);
      auto v = random_clopen(rng, S23, 2);
      REQUIRE(lc_mul(S23, lc_indicator(S23, u), lc_indicator(S23, v)) ==
              lc_indicator(S23, clopen_intersect(S23, u, v)));
    }
  }
  SECTION("evaluation sees the cylinder structure") {
    auto ind = lc_indicator(S2, clopen_mult_image(S2, SmoothNumber::make(S2, 2)));
    REQUIRE(lc_eval(S2, ind, CantorPoint::zero(S2)) == 1);
    REQUIRE(lc_eval(S2, ind, pt2({1})) == 0);
  }
  SECTION("ring axioms on random functions") {
    tests::Rng rng(47);
    for (int i = 0; i < 150; ++i) {
      auto f = lc_indicator(S23, random_clopen(rng, S23, 2));
      auto g = lc_indicator(S23, random_clopen(rng, S23, 2));
      auto h = lc_indicator(S23, random_clopen(rng, S23, 2));
      REQUIRE(lc_add(S23, f, g) == lc_add(S23, g, f));
      REQUIRE(lc_mul(S23, f, g) == lc_mul(S23, g, f));
      REQUIRE(lc_mul(S23, f, lc_add(S23, g, h)) ==
              lc_add(S23, lc_mul(S23, f, g), lc_mul(S23, f, h)));
      REQUIRE(lc_mul(S23, f, lc_const(S23, 1)) == f);
    }
  }
}
