#include "helpers.hpp"

#include <superdom/continuation.hpp>
#include <superdom/random.hpp>

#include <doctest.h>

using namespace testing;

namespace {

const SuperSpace s10{1, 0};
const SuperSpace s12{1, 2};

const std::string square_plus =
    "source 1|2\n"
    "target 1|0\n"
    "y1 = x1^2 + x1*t1*t2\n";

}  // namespace

TEST_CASE("substitution of a polynomial skeleton") {
  Skeleton f = sk(square_plus);
  LambdaPoint x = pt("x1 = 2 + g1g2\nt1 = g1\nt2 = g2\n", s12);
  LambdaPoint expected = pt("x1 = 4 + 6*g1g2\n", s10).with_rank(2);
  CHECK(eval_subst(f, x) == expected);
  CHECK(eval_taylor(f, x) == expected);
  GrassmannElement a = ge("2 + g1g2", 2);
  CHECK(eval_subst(f, x).coordinate(0) == a * a + a * ge("g1g2", 2));
}

TEST_CASE("denominators are inverted in the Grassmann algebra") {
  Skeleton f = sk("source 1|0\ntarget 1|0\ny1 = 1/x1\n");
  LambdaPoint x = pt("x1 = 1 + g1g2\n", s10);
  CHECK(eval_subst(f, x).coordinate(0) == ge("1 - g1g2", 2));
  CHECK(eval_taylor(f, x).coordinate(0) == ge("1 - g1g2", 2));
  LambdaPoint zero = pt("rank 2\nx1 = g1g2\n", s10);
  CHECK_THROWS_AS(eval_subst(f, zero), DomainError);
  CHECK_THROWS_AS(eval_taylor(f, zero), DomainError);
}

TEST_CASE("odd component with a nilpotent even soul") {
  Skeleton f = sk("source 1|1\ntarget 0|1\nh1 = x1*t1\n");
  LambdaPoint x = pt("rank 3\nx1 = 5 + g2g3\nt1 = g1\n", SuperSpace{1, 1});
  GrassmannElement expected = ge("5*g1 + g2g3g1", 3);
  CHECK(eval_subst(f, x).coordinate(0) == expected);
  CHECK(eval_taylor(f, x).coordinate(0) == expected);
}

TEST_CASE("identity and soul-free points") {
  Skeleton id = skeleton_identity(s12, DeWittDomain(s12));
  LambdaPoint x = pt("x1 = 3 + g1g3\nt1 = g2 - g1g2g3\nt2 = g3\n", s12);
  CHECK(eval_subst(id, x) == x);
  CHECK(eval_taylor(id, x) == x);
  Skeleton f = sk(square_plus);
  std::vector<Rational> body{q(3, 2)};
  LambdaPoint b = LambdaPoint::from_body(s12, 4, body);
  CHECK(eval_taylor(f, b).coordinate(0) == GrassmannElement::scalar(4, q(9, 4)));
  for (const auto& term : taylor_terms(f, b, 4))
    if (term.m + term.k > 0)
      for (const auto& v : term.value) CHECK(v.is_zero());
}

TEST_CASE("taylor and substitution agree on random data") {
  Rng rng(11);
  int compared = 0;
  for (int i = 0; i < 80; ++i) {
    SuperSpace source = random_space(rng, 3, 3);
    SuperSpace target = random_space(rng, 2, 2);
    Skeleton f = random_skeleton(rng, source, target, 3, i % 4 == 0);
    unsigned rank = std::uniform_int_distribution<unsigned>(0, 5)(rng);
    auto x = random_point(rng, f.source_domain(), rank);
    if (!x) continue;
    ++compared;
    CHECK(eval_taylor(f, *x) == eval_subst(f, *x));
    for (const auto& term : taylor_terms(f, *x, rank + 2))
      if (term.m + term.k > rank)
        for (const auto& v : term.value) CHECK(v.is_zero());
  }
  CHECK(compared > 60);
}

TEST_CASE("naturality under a generator swap") {
  Skeleton f = sk("source 1|2\ntarget 1|0\ny1 = x1 + t1*t2\n");
  LambdaPoint x = pt("x1 = 7\nt1 = g1\nt2 = g2\n", s12);
  std::vector<unsigned> perm{2, 1};
  GrassmannMorphism swap = GrassmannMorphism::permutation(perm);
  LambdaPoint left = eval_subst(f, point_map(swap, x));
  LambdaPoint right = point_map(swap, eval_subst(f, x));
  CHECK(left == right);
  CHECK(left.coordinate(0) == ge("7 - g1g2", 2));
  std::vector<GrassmannMorphism> ms{swap, GrassmannMorphism::counit(2)};
  std::vector<LambdaPoint> samples{x};
  CheckReport report = check_naturality(f, ms, samples);
  CHECK(report.ok());
  CHECK(report.passed > 0);
}

TEST_CASE("default naturality battery on random skeletons") {
  Rng rng(12);
  for (int i = 0; i < 15; ++i) {
    Skeleton f = random_skeleton(rng, SuperSpace{2, 2}, SuperSpace{1, 2}, 2, i % 3 == 0);
    std::vector<LambdaPoint> samples;
    for (int s = 0; s < 3; ++s)
      if (auto x = random_point(rng, f.source_domain(), 4)) samples.push_back(*x);
    CheckReport report = check_naturality(f, default_morphisms(4), samples);
    CHECK(report.ok());
  }
}

TEST_CASE("evaluation commutes with raising the rank") {
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    Skeleton f = random_skeleton(rng, SuperSpace{1, 2}, SuperSpace{1, 1}, 3, true);
    auto x = random_point(rng, f.source_domain(), 3);
    if (!x) continue;
    GrassmannMorphism up = GrassmannMorphism::inclusion(3, 4);
    CHECK(eval_subst(f, point_map(up, *x)) == point_map(up, eval_subst(f, *x)));
    CHECK(eval_subst(f, *x).with_rank(4) == eval_subst(f, x->with_rank(4)));
  }
}

TEST_CASE("finite increment expansion") {
  Skeleton square = sk("source 1|0\ntarget 1|0\ny1 = x1^2\n");
  LambdaPoint x = pt("rank 4\nx1 = 2 + g3g4\n", s10);
  LambdaPoint y1 = pt("rank 4\nx1 = 3*g1g3\n", s10);
  LambdaPoint y2 = pt("rank 4\nx1 = g2g4 - g2g3\n", s10);

  std::vector<LambdaPoint> one{y1};
  GrassmannElement a = x.coordinate(0), b = y1.coordinate(0), c = y2.coordinate(0);
  CHECK(taylor_increment(square, x, one).coordinate(0) == q(2) * a * b);

  std::vector<LambdaPoint> two{y1, y2};
  CHECK(taylor_increment(square, x, two).coordinate(0) == q(2) * a * (b + c) + q(2) * b * c);
  CHECK(taylor_increment(square, x, two) == eval_subst(square, x + y1 + y2) - eval_subst(square, x));

  std::vector<LambdaPoint> none;
  CHECK(taylor_increment(square, x, none) == LambdaPoint::zero(s10, 4));

  std::vector<LambdaPoint> bad{pt("rank 4\nx1 = g1g2 + g3g4\n", s10)};
  CHECK_THROWS_AS(taylor_increment(square, x, bad), Error);
}

TEST_CASE("increment expansion on random data") {
  Rng rng(14);
  for (int i = 0; i < 30; ++i) {
    Skeleton f = random_skeleton(rng, SuperSpace{1, 2}, SuperSpace{1, 1}, 3, i % 2 == 0);
    auto x = random_point(rng, f.source_domain(), 5);
    if (!x) continue;
    std::vector<LambdaPoint> ys;
    LambdaPoint sum = *x;
    for (unsigned label = 1; label <= 3; ++label) {
      ys.push_back(random_supported_point(rng, f.source(), 5, label));
      sum += ys.back();
    }
    if (!contains(f.source_domain(), sum)) continue;
    CHECK(taylor_increment(f, *x, ys) == eval_subst(f, sum) - eval_subst(f, *x));
  }
}
