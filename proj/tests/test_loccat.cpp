#include <catch2/catch_amalgamated.hpp>

#include "catdiv/k0.hpp"
#include "catdiv/loccat.hpp"
#include "support.hpp"

using namespace catdiv;

namespace {

const PrimeSet S23({2, 3});

SmoothNumber sm(int n) { return SmoothNumber::make(S23, n); }

using QObj = LocObject<RationalField>;
using QMor = LocMorphism<RationalField>;

QObj obj(int dim, int level) { return object_at_level(RationalField{}, dim, sm(level)); }

QMor random_morphism(tests::Rng& rng, const QObj& src, const QObj& dst, int level) {
  auto l = sm(level);
  int rows = divides(dst.level, l)->to_int() * dst.dim;
  int cols = divides(src.level, l)->to_int() * src.dim;
  Matrix<RationalField> m(RationalField{}, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Rat(rng.range(-3, 3));
  QMor f{src, dst, l, std::move(m)};
  f.validate();
  return f;
}

}  // namespace

TEST_CASE("objects at a level and their dimension") {
  REQUIRE(loc_dim(obj(1, 1)) == SRational(1));
  REQUIRE(loc_dim(obj(3, 6)) == SRational::make(S23, 1, 2));
  REQUIRE(loc_dim(obj(0, 12)) == SRational());
}

TEST_CASE("object refinement multiplies stalk and level together") {
  auto x = obj(1, 2);
  REQUIRE(refine(x, SmoothNumber::one()) == x);
  auto y = refine(x, sm(3));
  REQUIRE(y == obj(3, 6));
  REQUIRE(loc_dim(y) == loc_dim(x));
}

TEST_CASE("morphism refinement is the transition of the Hom colimit") {
  auto x = obj(2, 1);
  SECTION("identities refine to identities") {
    auto lifted = refine(loc_identity(x), sm(6));
    REQUIRE(lifted.matrix == Matrix<RationalField>::identity(RationalField{}, 12));
    REQUIRE(loc_equal(lifted, loc_identity(x)));
  }
  SECTION("refinement composes along the shared interleave convention") {
    tests::Rng rng(5);
    auto f = random_morphism(rng, x, obj(1, 2), 4);
    auto two_steps = refine(refine(f, sm(2)), sm(3));
    auto one_step = refine(f, sm(6));
    REQUIRE(two_steps.level == one_step.level);
    REQUIRE(two_steps.matrix == one_step.matrix);
  }
}

TEST_CASE("mor_normalize finds the minimal-level representative") {
  auto x = obj(1, 1);
  tests::Rng rng(9);

  SECTION("a doubled block diagonal descends") {
    auto g = random_morphism(rng, x, x, 2);
    auto doubled = refine(g, sm(2));
    REQUIRE(loc_equal(mor_normalize(doubled), g));
    REQUIRE(mor_normalize(doubled).level == mor_normalize(g).level);
  }
  SECTION("a level-2 matrix with distinct blocks does not descend") {
    Matrix<RationalField> m(RationalField{}, 2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 2;
    QMor f{x, x, sm(2), m};
    auto n = mor_normalize(f);
    REQUIRE(n.level == sm(2));
    REQUIRE(n.matrix == m);
  }
  SECTION("normalization is idempotent and commutes with refinement") {
    for (int i = 0; i < 50; ++i) {
      auto src = obj(rng.range(1, 3), rng.range(1, 2) == 1 ? 1 : 2);
      auto dst = obj(rng.range(1, 3), rng.range(1, 2) == 1 ? 1 : 3);
      int level = lcm(src.level, dst.level).to_int() * rng.range(1, 3);
      if (!S23.is_smooth(level)) level = lcm(src.level, dst.level).to_int();
      auto f = random_morphism(rng, src, dst, level);
      auto n = mor_normalize(f);
      REQUIRE(loc_equal(n, f));
      auto nn = mor_normalize(n);
      REQUIRE(nn.level == n.level);
      REQUIRE(nn.matrix == n.matrix);
      auto nr = mor_normalize(refine(f, sm(6)));
      REQUIRE(nr.level == n.level);
      REQUIRE(nr.matrix == n.matrix);
    }
  }
}

TEST_CASE("composition resolves mismatched levels at the join") {
  auto x = obj(1, 1);
  tests::Rng rng(21);
  auto f = random_morphism(rng, x, x, 2);
  auto g = random_morphism(rng, x, x, 3);
  auto gf = loc_compose(g, f);

  // manual refinement to level 6 and plain matrix product
  auto f6 = raise_to_level(f, sm(6));
  auto g6 = raise_to_level(g, sm(6));
  QMor expect{x, x, sm(6), g6.matrix * f6.matrix};
  REQUIRE(loc_equal(gf, expect));

  SECTION("identity is a unit") {
    REQUIRE(loc_equal(loc_compose(f, loc_identity(x)), f));
    REQUIRE(loc_equal(loc_compose(loc_identity(x), f), f));
  }
  SECTION("composition is associative across mixed levels") {
    for (int i = 0; i < 50; ++i) {
      auto a = random_morphism(rng, x, x, 2);
      auto b = random_morphism(rng, x, x, 3);
      auto c = random_morphism(rng, x, x, 4);
      REQUIRE(loc_equal(loc_compose(c, loc_compose(b, a)),
                        loc_compose(loc_compose(c, b), a)));
    }
  }
}

TEST_CASE("direct sums add dimensions") {
  auto x = obj(1, 2);
  auto y = obj(2, 3);
  auto s = loc_dsum(x, y);
  REQUIRE(s.level == sm(6));
  REQUIRE(loc_dim(s) == loc_dim(x) + loc_dim(y));

  tests::Rng rng(33);
  auto f = random_morphism(rng, x, x, 2);
  auto g = random_morphism(rng, y, y, 3);
  auto fg = loc_dsum(f, g);
  fg.validate();
  REQUIRE(loc_dim(fg.source) == loc_dim(x) + loc_dim(y));
}

TEST_CASE("multiplication endomorphisms") {
  auto x = obj(2, 3);
  SECTION("by one is the identity") {
    REQUIRE(loc_equal(mult_by(x, SmoothNumber::one()), loc_identity(x)));
  }
  SECTION("functorial in the factor") {
    auto m2 = mult_by(x, sm(2));
    auto m3 = mult_by(x, sm(3));
    REQUIRE(loc_equal(loc_compose(m2, m3), mult_by(x, sm(6))));
  }
  SECTION("invertible over the rationals for every smooth k") {
    for (int k : {1, 2, 3, 4, 6, 8, 9, 12})
      REQUIRE(mult_by(x, sm(k)).matrix.invertible());
  }
  SECTION("zero over a prime field containing the factor") {
    PrimeField F2(2);
    auto z = object_at_level(F2, 2, sm(3));
    auto m2 = mult_by(z, sm(2));
    REQUIRE(m2.matrix.rank() == 0);
    REQUIRE_FALSE(m2.matrix.invertible());
    // but an odd factor stays invertible
    REQUIRE(mult_by(z, sm(3)).matrix.invertible());
  }
  SECTION("the category machinery is generic over the base field") {
    PrimeField F5(5);
    auto x = object_at_level(F5, 1, sm(2));
    auto y = object_at_level(F5, 2, sm(4));
    auto w = find_iso(x, y, sm(4));
    REQUIRE(w);
    REQUIRE(w->materialize().matrix.invertible());
    auto two = mult_by(x, sm(2));
    REQUIRE(loc_equal(loc_compose(two, two), mult_by(x, sm(4))));
    REQUIRE(loc_equal(mor_normalize(refine(two, sm(6))), two));
  }
}

TEST_CASE("find_iso decides isomorphism by dimension at a common level") {
  SECTION("objects of equal dimension meet at the join of levels") {
    auto w = find_iso(obj(1, 2), obj(2, 4), sm(48));
    REQUIRE(w);
    REQUIRE(w->level == sm(4));
    auto f = w->materialize();
    f.validate();
    REQUIRE(f.matrix.invertible());
  }
  SECTION("distinct dimensions never match") {
    REQUIRE_FALSE(find_iso(obj(1, 2), obj(1, 3), sm(48)));
  }
  SECTION("an object is isomorphic to itself by the identity") {
    auto x = obj(3, 4);
    auto w = find_iso(x, x, sm(4));
    REQUIRE(w);
    REQUIRE(loc_equal(w->materialize(), loc_identity(x)));
  }
  SECTION("the bound is respected") {
    REQUIRE_FALSE(find_iso(obj(1, 16), obj(2, 32), sm(8)));
  }
}

TEST_CASE("refinement soundness: an object meets its refinement") {
  for (int d = 1; d <= 6; ++d)
    for (int m : {1, 2, 3, 4, 6, 8, 9, 12})
      for (int s : {1, 2, 3, 4, 6, 8, 9, 12}) {
        auto x = obj(d, m);
        auto w = find_iso(x, refine(x, sm(s)), sm(s * m));
        REQUIRE(w);
        REQUIRE(w->level == sm(s) * x.level);
      }
}

TEST_CASE("dimension is a complete isomorphism invariant over a field") {
  std::vector<int> levels = {1, 2, 3, 4, 6, 8, 9, 12};
  for (int d1 = 0; d1 <= 12; ++d1)
    for (int d2 = 0; d2 <= 12; ++d2)
      for (int m1 : levels)
        for (int m2 : levels) {
          auto x = obj(d1, m1), y = obj(d2, m2);
          bool found = find_iso(x, y, lcm(x.level, y.level)).has_value();
          REQUIRE(found == (loc_dim(x) == loc_dim(y)));
        }
}

TEST_CASE("grothendieck group of the truncated presentation") {
  PrimeSet S2({2});
  SECTION("bound one gives the integers") {
    auto p = k0_presentation(S2, SmoothNumber::one());
    REQUIRE(p.generators.size() == 1);
    REQUIRE(p.relation_count == 0);
    REQUIRE(p.is_infinite_cyclic());
    auto img = p.free_generator_image();
    REQUIRE(img);
    REQUIRE(*img == SRational(1));
  }
  SECTION("bound two: one relation, free on the deeper generator") {
    auto p = k0_presentation(S2, SmoothNumber::make(S2, 2));
    REQUIRE(p.generators.size() == 2);
    REQUIRE(p.relation_count == 1);
    REQUIRE(p.invariant_factors == std::vector<Int>{1});
    REQUIRE(p.is_infinite_cyclic());
    auto img = p.free_generator_image();
    REQUIRE(img);
    // free generator maps to 1/2 up to sign
    REQUIRE((*img == SRational::make(S2, 1, 2) || *img == SRational::make(S2, -1, 2)));
    REQUIRE(p.class_map[0] == SRational(1));
    REQUIRE(p.class_map[1] == SRational::make(S2, 1, 2));
  }
  SECTION("the class map kills every relation") {
    auto p = k0_presentation(S23, sm(36));
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      for (std::size_t j = 0; j < p.generators.size(); ++j) {
        if (i == j) continue;
        auto k = divides(p.generators[i], p.generators[j]);
        if (!k) continue;
        REQUIRE(p.class_map[i] == SRational(k->value()) * p.class_map[j]);
      }
  }
  SECTION("large mixed bound stays infinite cyclic with the right image") {
    auto M = sm(5184);  // 2^6 * 3^4
    auto p = k0_presentation(S23, M);
    REQUIRE(p.is_infinite_cyclic());
    auto img = p.free_generator_image();
    REQUIRE(img);
    REQUIRE((*img == SRational::make(S23, 1, 5184) ||
             *img == SRational::make(S23, -1, 5184)));
  }
}

TEST_CASE("divisible-presentation coherence witnesses") {
  auto x = obj(1, 1);
  PrimeSet S2({2});
  auto sm2 = [&](int n) { return SmoothNumber::make(S2, n); };
  auto p = make_div_presentation(x, sm2(8));

  SECTION("degenerate chains hold trivially") {
    REQUIRE(div_coherence_check(p, {sm2(4)}));
  }
  SECTION("the default interleave witnesses satisfy the simplex condition") {
    REQUIRE(div_coherence_check(p, {sm2(1), sm2(2), sm2(4)}));
    REQUIRE(div_coherence_check(p, {sm2(1), sm2(2), sm2(2), sm2(2)}));
    REQUIRE(div_coherence_check(p, {sm2(2), sm2(2), sm2(2)}));
    auto q = make_div_presentation(obj(1, 1), sm(36));
    REQUIRE(div_coherence_check(q, {sm(1), sm(2), sm(3), sm(6)}));
    REQUIRE(div_coherence_check(q, {sm(3), sm(2), sm(6)}));
  }
  SECTION("a corrupted witness is detected") {
    auto bad = p;
    corrupt_witness(bad, 1, 2);
    REQUIRE_FALSE(div_coherence_check(bad, {sm2(1), sm2(2), sm2(2)}));
  }
  SECTION("chains outside the window are errors") {
    REQUIRE_THROWS_AS(div_coherence_check(p, {sm2(4), sm2(4)}), std::invalid_argument);
  }
}

TEST_CASE("slot evaluation truncates the coset-indexed summands") {
  PrimeSet S2({2});
  SECTION("the unit slot of the unit object") {
    auto v = object_at_level(RationalField{}, 1, SmoothNumber::one());
    auto w = evaluate_slot(S2, v, SmoothNumber::one(), 1);
    REQUIRE(w.summands.size() == 1);
    REQUIRE(w.summands[0].first == TorsionElement{});
    REQUIRE(w.summands[0].second == 1);
    REQUIRE(w.truncated);
  }
  SECTION("three cosets at the order-two slot") {
    auto v = object_at_level(RationalField{}, 1, SmoothNumber::make(S2, 2));
    auto w = evaluate_slot(S2, v, SmoothNumber::make(S2, 2), 3);
    REQUIRE(w.summands.size() == 3);
    REQUIRE(w.summands[0].first == TorsionElement{0, 1});
    REQUIRE(w.summands[1].first == (TorsionElement{1, 4}));
    REQUIRE(w.summands[2].first == (TorsionElement{1, 8}));
  }
  SECTION("truncation zero is an empty flagged list") {
    auto v = object_at_level(RationalField{}, 2, SmoothNumber::make(S2, 2));
    auto w = evaluate_slot(S2, v, SmoothNumber::make(S2, 2), 0);
    REQUIRE(w.summands.empty());
    REQUIRE(w.truncated);
  }
}
