#include "helpers.hpp"

#include <superdom/continuation.hpp>
#include <superdom/morphisms.hpp>
#include <superdom/random.hpp>

#include <doctest.h>

using namespace testing;

namespace {

const SuperSpace s11{1, 1};
const SuperSpace s12{1, 2};

}  // namespace

TEST_CASE("composition by substitution") {
  Skeleton g = sk("source 1|0\ntarget 1|0\ny1 = x1^2\n");
  Skeleton f = sk("source 1|2\ntarget 1|0\ny1 = x1 + t1*t2\n");
  Skeleton gf = compose_subst(g, f);
  CHECK(gf.source() == s12);
  CHECK(gf.component(0) == sf("x1^2 + 2*x1*t1*t2", s12));
  CHECK(compose_formula(g, f) == gf);
  CHECK(compose_subst(g, skeleton_identity(SuperSpace{1, 0}, DeWittDomain(SuperSpace{1, 0}))) == g);
  CHECK(compose_subst(skeleton_identity(SuperSpace{1, 0}, DeWittDomain(SuperSpace{1, 0})), f) == f);
  CHECK_THROWS_AS(compose_subst(f, g), SpaceMismatch);
}

TEST_CASE("double reciprocal") {
  Skeleton inv = sk("source 1|0\ntarget 1|0\ny1 = 1/x1\n");
  Skeleton both = compose_subst(inv, inv);
  CHECK(both.component(0) == sf("x1", SuperSpace{1, 0}));
  std::vector<Rational> zero{0}, two{2};
  CHECK_FALSE(both.source_domain().contains_body(zero));
  CHECK(both.source_domain().contains_body(two));
  CHECK(compose_formula(inv, inv) == both);
}

TEST_CASE("composition formula on simple cases") {
  Skeleton odd_linear = sk("source 0|1\ntarget 0|1\nh1 = 3*t1\n");
  Skeleton f = sk("source 1|1\ntarget 0|1\nh1 = t1\n");
  CHECK(compose_formula(odd_linear, f).component(0) == sf("3*t1", s11));
  Skeleton sq = sk("source 1|0\ntarget 1|0\ny1 = x1^2\n");
  Skeleton x = sk("source 1|0\ntarget 1|0\ny1 = x1\n");
  CHECK(compose_formula(sq, x).component(0) == sf("x1^2", SuperSpace{1, 0}));
}

TEST_CASE("composition formula agrees with substitution") {
  Rng rng(31);
  for (int i = 0; i < 25; ++i) {
    SuperSpace a = random_space(rng, 2, 2), b = random_space(rng, 2, 3), c = random_space(rng, 1, 2);
    Skeleton f = random_skeleton(rng, a, b, 2, i % 3 == 0);
    Skeleton g = random_skeleton(rng, b, c, 2, i % 4 == 0);
    CheckReport report = compare_skeletons(compose_formula(g, f), compose_subst(g, f), rng, 5);
    CHECK(report.ok());
  }
}

TEST_CASE("comparison detects a wrong coefficient") {
  Rng rng(32);
  Skeleton a = sk("source 1|2\ntarget 1|0\ny1 = x1 + t1*t2\n");
  Skeleton b = sk("source 1|2\ntarget 1|0\ny1 = x1 - t1*t2\n");
  CHECK_FALSE(compare_skeletons(a, b, rng, 3).ok());
}

TEST_CASE("associativity and functoriality") {
  Rng rng(33);
  for (int i = 0; i < 15; ++i) {
    SuperSpace s = random_space(rng, 2, 2);
    Skeleton f = random_skeleton(rng, s, s, 2);
    Skeleton g = random_skeleton(rng, s, s, 2);
    Skeleton h = random_skeleton(rng, s, s, 2);
    CHECK(compose_subst(compose_subst(h, g), f) == compose_subst(h, compose_subst(g, f)));
    auto x = random_point(rng, f.source_domain(), 4);
    REQUIRE(x);
    CHECK(eval_subst(compose_subst(g, f), *x) == eval_subst(g, eval_subst(f, *x)));
  }
}

TEST_CASE("pullback") {
  Skeleton f = sk("source 1|2\ntarget 1|1\ny1 = x1 + t1*t2\nh1 = x1*t2\n");
  CHECK(pullback(f, sf("x1", s11)) == f.component(0));
  CHECK(pullback(f, sf("t1", s11)) == f.component(1));
  CHECK(pullback(f, sf("1", s11)) == sf("1", s12));
  CHECK(pullback(f, sf("x1*t1", s11)) == sf("x1^2*t2", s12));

  Rng rng(34);
  for (int i = 0; i < 30; ++i) {
    Skeleton g = random_skeleton(rng, SuperSpace{2, 2}, SuperSpace{1, 2}, 2);
    SuperFunction h1 = random_superfunction(rng, g.target(), Parity::mixed, 2);
    SuperFunction h2 = random_superfunction(rng, g.target(), Parity::mixed, 2);
    CHECK(pullback(g, h1 * h2) == pullback(g, h1) * pullback(g, h2));
    CHECK(pullback(g, h1 + h2) == pullback(g, h1) + pullback(g, h2));
  }
}

TEST_CASE("skeleton is recovered from its coordinate pullbacks") {
  Rng rng(35);
  for (int i = 0; i < 10; ++i) {
    Skeleton f = random_skeleton(rng, SuperSpace{1, 2}, SuperSpace{2, 1}, 2, i % 2 == 0);
    std::vector<SuperFunction> components;
    for (unsigned c = 0; c < 2; ++c) components.push_back(pullback(f, SuperFunction::even_coordinate(f.target(), c)));
    components.push_back(pullback(f, SuperFunction::odd_coordinate(f.target(), 0)));
    CHECK(Skeleton(f.source(), f.source_domain(), f.target(), f.target_domain(), components) == f);
  }
}

TEST_CASE("points from coordinate images") {
  DeWittDomain whole(s11);
  std::vector<GrassmannElement> images{ge("3 + g1g2", 2), ge("g1", 2)};
  LambdaPoint x = decode_point(s11, 2, images, whole);
  CHECK(x == pt("x1 = 3 + g1g2\nt1 = g1\n", s11));
  PointEvaluation at = encode_point(whole, x);
  CHECK(at(sf("x1^2", s11)) == ge("9 + 6*g1g2", 2));
  CHECK(at(sf("x1", s11)) == images[0]);
  CHECK(at(sf("t1", s11)) == images[1]);

  std::vector<GrassmannElement> body{ge("3", 2), ge("0", 2)};
  CHECK(decode_point(s11, 2, body, whole) == LambdaPoint::from_body(s11, 2, std::vector<Rational>{3}));

  std::vector<GrassmannElement> swapped{ge("g1", 2), ge("3", 2)};
  CHECK_THROWS_AS(decode_point(s11, 2, swapped, whole), ParityError);
  DeWittDomain positive = whole.excluding(Polynomial::variable(1, 0));
  std::vector<GrassmannElement> at_zero{ge("g1g2", 2), ge("g1", 2)};
  CHECK_THROWS_AS(decode_point(s11, 2, at_zero, positive), DomainError);
}

TEST_CASE("evaluation is multiplicative") {
  Rng rng(36);
  for (int i = 0; i < 30; ++i) {
    SuperSpace s{2, 2};
    SuperFunction h1 = random_rational_superfunction(rng, s, Parity::mixed, 2);
    SuperFunction h2 = random_superfunction(rng, s, Parity::mixed, 2);
    DeWittDomain domain = h1.domain().intersect(h2.domain());
    auto x = random_point(rng, domain, 4);
    if (!x) continue;
    PointEvaluation at = encode_point(domain, *x);
    CHECK(at(h1 * h2) == at(h1) * at(h2));
    CHECK(at(h1 + h2) == at(h1) + at(h2));
    std::vector<GrassmannElement> images;
    for (const auto& c : x->even_values()) images.push_back(c);
    for (const auto& c : x->odd_values()) images.push_back(c);
    CHECK(decode_point(s, 4, images, domain) == *x);
  }
}

TEST_CASE("algebra morphism tables") {
  DeWittDomain whole(s11);
  MorphismTable coords{{sf("x1", s11), ge("3 + g1g2", 2)}, {sf("t1", s11), ge("g1", 2)}};
  CHECK(check_algebra_morphism(s11, whole, 2, coords).ok());

  MorphismTable good = coords;
  good.push_back({sf("x1^2", s11), ge("9 + 6*g1g2", 2)});
  good.push_back({sf("x1*t1", s11), ge("3*g1", 2)});
  CHECK(check_algebra_morphism(s11, whole, 2, good).ok());

  MorphismTable bad = coords;
  bad.push_back({sf("x1^2", s11), ge("9", 2)});
  CheckReport report = check_algebra_morphism(s11, whole, 2, bad);
  CHECK_FALSE(report.ok());
  CHECK(report.failed == 1);

  MorphismTable missing{{sf("x1", s11), ge("3", 2)}};
  CHECK_THROWS_AS(check_algebra_morphism(s11, whole, 2, missing), Error);

  LambdaPoint x = pt("rank 3\nx1 = 1/2 + g1g3\nt1 = g2 - g1g2g3\n", s11);
  PointEvaluation at = encode_point(whole, x);
  MorphismTable generated;
  for (const char* text : {"x1", "t1", "x1^3 - x1*t1", "1/(1 + x1^2)", "t1*x1^2"}) {
    SuperFunction h = sf(text, s11);
    generated.push_back({h, at(h)});
  }
  CHECK(check_algebra_morphism(s11, whole, 3, generated).ok());
}
