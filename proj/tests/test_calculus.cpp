#include "helpers.hpp"

#include <superdom/calculus.hpp>
#include <superdom/continuation.hpp>

#include <doctest.h>

using namespace testing;

namespace {

const std::string square = "source 1|0\ntarget 1|0\ny1 = x1^2\n";
const std::string x_xi = "source 1|1\ntarget 0|1\nh1 = x1*t1\n";

SuperVector vec(std::vector<std::string> entries, unsigned rank) {
  SuperVector out;
  for (const auto& e : entries) out.push_back(ge(e, rank));
  return out;
}

}  // namespace

TEST_CASE("difference quotient") {
  BgnQuotient sq = bgn_quotient(sk(square));
  CHECK(sq.extended == SuperSpace{3, 0});
  CHECK(sq.quotient.at(0) == sf("2*x1*x2 + x3*x2^2", sq.extended));

  BgnQuotient mixed = bgn_quotient(sk(x_xi));
  CHECK(mixed.extended == SuperSpace{3, 2});
  CHECK(mixed.quotient.at(0) == sf("x2*t1 + x1*t2 + x3*x2*t2", mixed.extended));

  BgnQuotient constant = bgn_quotient(sk("source 1|1\ntarget 1|0\ny1 = 5\n"));
  CHECK(constant.quotient.at(0).is_zero());

  for (const auto& q : {sq, mixed}) {
    SuperFunction t = SuperFunction::even_coordinate(q.extended, q.extended.even_dim - 1);
    CHECK(q.shifted.at(0) - q.lifted.at(0) == t * q.quotient.at(0));
  }
}

TEST_CASE("difference quotient of rational components") {
  Skeleton f = sk("source 1|1\ntarget 1|1\ny1 = 1/x1 + x1^2\nh1 = t1/(1 + x1^2)\n");
  CHECK(check_bgn(f).ok());
  CHECK(check_bgn(sk(square)).ok());
}

TEST_CASE("symbolic derivatives") {
  Skeleton f = sk(square);
  std::vector<unsigned> once{0}, twice{0, 0};
  CHECK(derivative(f, once).at(0) == sf("2*x1", SuperSpace{1, 0}));
  CHECK(derivative(f, twice).at(0) == sf("2", SuperSpace{1, 0}));
  auto all = derivative(f, 2);
  CHECK(all.size() == 1);
  CHECK(all.at(twice).at(0) == sf("2", SuperSpace{1, 0}));

  Skeleton g = sk("source 1|2\ntarget 1|0\ny1 = x1*t1*t2\n");
  CHECK(derivative(g, once).at(0) == sf("t1*t2", SuperSpace{1, 2}));
  std::vector<unsigned> d12{1, 2}, d21{2, 1};
  CHECK(derivative(g, d12).at(0) == -derivative(g, d21).at(0));
  CHECK(derivative(g, 3).size() == 27);
  CHECK(check_derivative_symmetry(g, 2).ok());
  CHECK(check_derivative_symmetry(g, 3).ok());
}

TEST_CASE("derivative symmetry on random skeletons") {
  Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    Skeleton f = random_skeleton(rng, SuperSpace{2, 2}, SuperSpace{1, 1}, 3, i % 2 == 0);
    CHECK(check_derivative_symmetry(f, 2).ok());
    CHECK(check_bgn(f).ok());
  }
}

TEST_CASE("differential over the Grassmann algebra") {
  Skeleton f = sk(square);
  SuperSpace s{1, 0};
  LambdaPoint x = pt("rank 2\nx1 = 3 + g1g2\n", s);
  LambdaPoint v = pt("rank 2\nx1 = 2 - g1g2\n", s);
  GrassmannElement expected = q(2) * x.coordinate(0) * v.coordinate(0);
  CHECK(lambda_differential(f, x, v).at(0) == expected);

  GrassmannElement a = ge("g1g2", 2);
  LambdaPoint av = pt("rank 2\nx1 = 2*g1g2\n", s);
  CHECK(lambda_differential(f, x, av).at(0) == a * expected);

  Skeleton g = sk(x_xi);
  LambdaPoint y = pt("rank 3\nx1 = 1 + g2g3\nt1 = g1\n", SuperSpace{1, 1});
  LambdaPoint w = pt("rank 3\nx1 = g1g3\nt1 = 2*g2 + g3\n", SuperSpace{1, 1});
  GrassmannElement d = w.coordinate(0) * y.coordinate(1) + y.coordinate(0) * w.coordinate(1);
  CHECK(lambda_differential(g, y, w).at(0) == d);

  std::vector<LinearitySample> samples{{y, w, ge("1 + g1g2", 3)}, {y, w, ge("1", 3)}, {y, w, ge("g2g3", 3)}};
  CHECK(check_lambda_linearity(g, samples).ok());
}

TEST_CASE("linearity on random data") {
  Rng rng(22);
  std::size_t checked = 0;
  for (int i = 0; i < 20; ++i) {
    Skeleton f = random_skeleton(rng, SuperSpace{1, 2}, SuperSpace{1, 2}, 3, i % 2 == 1);
    std::vector<LinearitySample> samples;
    for (int s = 0; s < 3; ++s)
      if (auto x = random_point(rng, f.source_domain(), 4))
        samples.push_back({*x, random_vector_point(rng, f.source(), 4), random_grassmann(rng, 4, Parity::even)});
    CheckReport report = check_lambda_linearity(f, samples);
    CHECK(report.ok());
    checked += report.passed;
  }
  CHECK(checked > 40);
}

TEST_CASE("hadamard factors") {
  std::vector<Rational> one{1};
  Skeleton f = sk(square);
  auto h = hadamard_decompose(f, one);
  REQUIRE(h.size() == 1);
  CHECK(h[0].component(0) == sf("x1 + 1", SuperSpace{1, 0}));
  CHECK(check_hadamard(f, one, h).ok());

  Skeleton prod = sk("source 2|0\ntarget 1|0\ny1 = x1*x2\n");
  std::vector<Rational> origin{0, 0};
  auto hp = hadamard_decompose(prod, origin);
  REQUIRE(hp.size() == 2);
  CHECK(check_hadamard(prod, origin, hp).ok());
  SuperSpace s2{2, 0};
  SuperFunction sum = sf("x1", s2) * hp[0].component(0) + sf("x2", s2) * hp[1].component(0);
  CHECK(sum == sf("x1*x2", s2));

  std::vector<Skeleton> wrong{sk("source 1|0\ntarget 1|0\ny1 = x1\n")};
  CHECK_FALSE(check_hadamard(f, one, wrong).ok());

  auto hc = hadamard_decompose(sk("source 2|1\ntarget 1|1\ny1 = 4\nh1 = 3*t1\n"), origin);
  for (const auto& s : hc)
    for (const auto& c : s.components()) CHECK(c.is_zero());

  CHECK_THROWS_AS(hadamard_decompose(sk("source 1|0\ntarget 1|0\ny1 = 1/x1\n"), one), Error);
}

TEST_CASE("hadamard on random polynomial skeletons") {
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    Skeleton f = random_skeleton(rng, SuperSpace{2, 2}, SuperSpace{1, 1}, 3);
    std::vector<Rational> x0{random_rational(rng), random_rational(rng)};
    CHECK(check_hadamard(f, x0, hadamard_decompose(f, x0)).ok());
  }
}

TEST_CASE("taylor polynomials") {
  std::vector<Rational> one{1}, zero{0};
  Skeleton inv = sk("source 1|0\ntarget 1|0\ny1 = 1/x1\n");
  Skeleton p = taylor_polynomial(inv, one, 2);
  CHECK(p.component(0) == sf("1 - (x1 - 1) + (x1 - 1)^2", SuperSpace{1, 0}));
  CHECK(p.is_polynomial());
  CHECK(check_taylor_polynomial(inv, p, one, 2).ok());
  CHECK_FALSE(check_taylor_polynomial(inv, taylor_polynomial(inv, one, 1), one, 2).ok());
  CHECK_THROWS_AS(taylor_polynomial(inv, zero, 2), DomainError);

  Skeleton cubic = sk("source 1|1\ntarget 1|1\ny1 = x1^3 + t1*t1\nh1 = x1*t1\n");
  CHECK(taylor_polynomial(cubic, one, 3) == cubic);

  Skeleton g = sk(x_xi);
  Skeleton p1 = taylor_polynomial(g, zero, 1);
  CHECK(p1.component(0).is_zero());
  CHECK(check_taylor_polynomial(g, p1, zero, 1).ok());
  CHECK(taylor_polynomial(g, zero, 2) == g);
}

TEST_CASE("body derivatives") {
  Skeleton f = sk(square);
  std::vector<Rational> three{3};
  std::vector<unsigned> once{0}, twice{0, 0}, thrice{0, 0, 0};
  CHECK(body_derivative(f, three, once).at(0) == GrassmannElement::scalar(0, 6));
  CHECK(body_derivative(f, three, twice).at(0).body() == 2);
  CHECK(body_derivative(f, three, thrice).at(0).is_zero());
}

TEST_CASE("derivative family on basis arguments") {
  Skeleton f = sk("source 0|2\ntarget 1|0\ny1 = t1*t2\n");
  LambdaPoint x = LambdaPoint::zero(SuperSpace{0, 2}, 2);
  std::vector<SuperVector> e12{vec({"1", "0"}, 2), vec({"0", "1"}, 2)};
  std::vector<SuperVector> e21{e12[1], e12[0]};
  CHECK(family_fk(f, x, e12).at(0) == ge("1", 2));
  CHECK(family_fk(f, x, e21).at(0) == ge("-1", 2));
}

TEST_CASE("derivative family expands a square") {
  Skeleton f = sk(square);
  SuperSpace s{1, 0};
  LambdaPoint x = pt("rank 2\nx1 = 3\n", s);
  LambdaPoint y = pt("rank 2\nx1 = g1g2\n", s);
  std::vector<SuperVector> none, one{y.as_vector()}, two{y.as_vector(), y.as_vector()}, ex{vec({"1"}, 2)};
  CHECK(family_fk(f, x, none).at(0) == ge("9", 2));
  CHECK(family_fk(f, x, ex).at(0) == ge("6", 2));
  std::vector<SuperVector> exx{ex[0], ex[0]}, exxx{ex[0], ex[0], ex[0]};
  CHECK(family_fk(f, x, exx).at(0) == ge("2", 2));
  CHECK(family_fk(f, x, exxx).at(0).is_zero());
  GrassmannElement expansion = family_fk(f, x, none).at(0) + family_fk(f, x, one).at(0) +
                               q(1, 2) * family_fk(f, x, two).at(0);
  CHECK(expansion == ge("9 + 6*g1g2", 2));
  CHECK(expansion == eval_subst(f, x + y).coordinate(0));
}

TEST_CASE("derivative family battery") {
  Rng rng(24);
  for (int i = 0; i < 8; ++i) {
    Skeleton f = random_skeleton(rng, SuperSpace{1, 2}, SuperSpace{1, 1}, 3, i % 2 == 0);
    std::vector<LambdaPoint> points;
    for (int s = 0; s < 2; ++s)
      if (auto x = random_point(rng, f.source_domain(), 4)) points.push_back(*x);
    CheckReport report = check_def43(f, points, rng, 2);
    CHECK(report.ok());
    CHECK(report.passed > 0);
  }
}
