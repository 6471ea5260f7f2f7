#include "helpers.hpp"

#include <superdom/random.hpp>

#include <doctest.h>

using namespace testing;

namespace {

const SuperSpace line{1, 1};

DeWittDomain punctured() { return DeWittDomain(line).excluding(Polynomial::variable(1, 0)); }

}  // namespace

TEST_CASE("points split into body, even soul and odd part") {
  LambdaPoint x = pt("x1 = 2 + g1g2\nt1 = g1\n", line);
  PointSplit s = split(x);
  CHECK(s.body == std::vector<Rational>{2});
  CHECK(s.even_soul[0] == ge("g1g2", 2));
  CHECK(s.odd_part[0] == ge("g1", 2));
  CHECK(reassemble(line, 2, s) == x);

  PointSplit zero = split(LambdaPoint::zero(SuperSpace{2, 1}, 3));
  CHECK(zero.body == std::vector<Rational>{0, 0});
  CHECK(zero.even_soul[1].is_zero());
  CHECK(zero.odd_part[0].is_zero());

  PointSplit nil = split(pt("x1 = g1g2\n", SuperSpace{1, 0}));
  CHECK(nil.body == std::vector<Rational>{0});
  CHECK(nil.even_soul[0] == ge("g1g2", 2));
}

TEST_CASE("points must be even") {
  CHECK_THROWS_AS(LambdaPoint(line, 1, {ge("g1", 1)}, {ge("0", 1)}), ParityError);
  CHECK_THROWS_AS(LambdaPoint(line, 2, {ge("1", 2)}, {ge("g1g2", 2)}), ParityError);
  CHECK_THROWS_AS(LambdaPoint(line, 2, {ge("1", 1)}, {ge("0", 2)}), RankMismatch);
}

TEST_CASE("domain membership depends on the body") {
  CHECK(contains(punctured(), pt("x1 = 2 + g1g2\n", line)));
  CHECK_FALSE(contains(punctured(), pt("x1 = g1g2\n", line)));
  Interval unit{q(0), q(1)};
  DeWittDomain box(SuperSpace{1, 0}, {Box{{unit}}});
  CHECK(contains(box, pt("rank 4\nx1 = 1/2 + g1g2\n", SuperSpace{1, 0})));
  CHECK_FALSE(contains(box, pt("x1 = 1\n", SuperSpace{1, 0})));
  CHECK_THROWS_AS(contains(box, pt("x1 = 1\n", line)), SpaceMismatch);
}

TEST_CASE("domains intersect and exclude") {
  const SuperSpace plane{2, 0};
  DeWittDomain a(plane, {Box{{Interval{q(0), std::nullopt}, Interval{}}}});
  DeWittDomain b = DeWittDomain(plane).excluding(Polynomial::variable(2, 1));
  DeWittDomain c = a.intersect(b);
  std::vector<Rational> inside{1, 1}, on_line{1, 0}, left{-1, 1};
  CHECK(c.contains_body(inside));
  CHECK_FALSE(c.contains_body(on_line));
  CHECK_FALSE(c.contains_body(left));
  Polynomial y = Polynomial::variable(2, 1);
  CHECK(b.excluding(y * y).excluded().size() == 1);
  CHECK(b.excluding(3 * y).excluded().size() == 1);
  CHECK(b.excluding(Polynomial::constant(2, 5)) == b);
  Rng rng(3);
  for (const auto& body : c.sample(rng, 20)) CHECK(c.contains_body(body));
}

TEST_CASE("point maps") {
  LambdaPoint x = pt("x1 = 2 + g1g2\nt1 = g1\n", line);
  CHECK(point_map(GrassmannMorphism::counit(2), x) == pt("rank 0\nx1 = 2\n", line));
  CHECK(point_map(GrassmannMorphism::identity(2), x) == x);
  std::vector<unsigned> swap{2, 1};
  LambdaPoint y = pt("x1 = 1 + g1g2\n", SuperSpace{1, 0});
  CHECK(point_map(GrassmannMorphism::permutation(swap), y) == pt("x1 = 1 - g1g2\n", SuperSpace{1, 0}));
}

TEST_CASE("point arithmetic") {
  LambdaPoint a = pt("x1 = 2 + g1g2\nt1 = g1\n", line);
  LambdaPoint b = pt("x1 = -1\nt1 = g2\n", line);
  CHECK(a + b == pt("x1 = 1 + g1g2\nt1 = g1 + g2\n", line));
  CHECK(a + b - b == a);
  CHECK(a.with_rank(4).rank() == 4);
  CHECK(a.with_rank(4).with_rank(2) == a);
}
