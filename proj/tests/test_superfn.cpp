#include "helpers.hpp"

#include <superdom/random.hpp>

#include <doctest.h>

using namespace testing;

namespace {

const SuperSpace s12{1, 2};
const SuperSpace s04{0, 4};

}  // namespace

TEST_CASE("rational coefficients normalize") {
  Polynomial x = Polynomial::variable(1, 0);
  CoeffFn inv = CoeffFn::quotient(Polynomial::constant(1, 1), x);
  CHECK(inv + inv == CoeffFn::quotient(Polynomial::constant(1, 2), x));
  CHECK(CoeffFn::quotient(x * x, x) == CoeffFn(x));
  CHECK(CoeffFn::quotient(x * x, x).is_polynomial());
  CHECK(inv.partial(0) == CoeffFn::quotient(Polynomial::constant(1, -1), x * x));
  CHECK((inv * CoeffFn(x)).is_constant());
  std::vector<Rational> two{2};
  CHECK(inv.evaluate(two) == q(1, 2));
  std::vector<Rational> zero{0};
  CHECK_THROWS_AS(inv.evaluate(zero), DomainError);
  CHECK_THROWS_AS(CoeffFn::quotient(x, Polynomial(1)), NotInvertible);
}

TEST_CASE("sums") {
  CHECK((sf("x1*t1", s12) + sf("-x1*t1", s12)).is_zero());
  CHECK(sf("x1 + t1*t2", s12).terms().size() == 2);
  CHECK(sf("1/x1 + 1/x1", s12) == sf("2/x1", s12));
}

TEST_CASE("shuffle and monomial products") {
  for (auto product : {sf_mul_shuffle, sf_mul_monomial}) {
    CHECK(product(sf("t1", s12), sf("t2", s12)) == sf("t1*t2", s12));
    CHECK(product(sf("t1*t2", s12), sf("t1", s12)).is_zero());
    CHECK(product(sf("x1 + t1*t2", s12), sf("x1", s12)) == sf("x1^2 + x1*t1*t2", s12));
    CHECK(product(sf("t2", s12), sf("t1", s12)) == sf("-1*t1*t2", s12));
  }
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    SuperFunction a = random_superfunction(rng, s04, Parity::mixed, 2, 5);
    SuperFunction b = random_superfunction(rng, s04, Parity::mixed, 2, 5);
    CHECK(sf_mul_shuffle(a, b) == sf_mul_monomial(a, b));
  }
}

TEST_CASE("inversion") {
  SuperFunction x = sf("x1", s12);
  SuperFunction inv = sf_invert(x);
  CHECK(inv == sf("1/x1", s12));
  CHECK_FALSE(inv.domain().is_whole());
  CHECK(sf_invert(sf("1 + t1*t2", s12)) == sf("1 - t1*t2", s12));
  SuperFunction f = sf("x1 + t1*t2", s12);
  SuperFunction g = sf_invert(f);
  CHECK(g * f == SuperFunction::constant(s12, 1));
  CoeffFn inv_x = CoeffFn::quotient(Polynomial::constant(1, 1), Polynomial::variable(1, 0));
  SuperFunction expected = SuperFunction::term(s12, MultiIndex(), inv_x);
  expected.add_term(mi({1, 2}), -(inv_x * inv_x));
  CHECK(g == expected);
  CHECK_THROWS(sf_invert(sf("t1*t2", s12)));
}

TEST_CASE("general inverse admits odd parts") {
  const SuperSpace s{1, 1};
  SuperFunction f = sf("x1 + t1", s);
  CHECK(sf_inverse(f) * f == SuperFunction::constant(s, 1));
}

TEST_CASE("derivatives") {
  CHECK(sf_partial(sf("x1^2", s12), 0) == sf("2*x1", s12));
  CHECK(sf_partial(sf("1/x1", s12), 0) == sf("-1/x1^2", s12));
  CHECK(sf_partial(sf("x1*t1*t2", s12), 0) == sf("t1*t2", s12));
  CHECK(sf_odd_partial(sf("t1*t2", s12), 2) == sf("t1", s12));
  CHECK(sf_odd_partial(sf("t1*t2", s12), 1) == sf("-1*t2", s12));
}

TEST_CASE("alternating coefficient maps") {
  SuperFunction f = sf("t1*t2", s12);
  std::vector<Rational> body{7};
  std::vector<unsigned> e12{1, 2}, e21{2, 1}, e11{1, 1};
  CHECK(phi_k_eval(f, e12).evaluate(body) == 1);
  CHECK(phi_k_eval(f, e21).evaluate(body) == -1);
  CHECK(phi_k_eval(f, e11).is_zero());
}

TEST_CASE("identity skeleton") {
  Skeleton id11 = skeleton_identity(SuperSpace{1, 1}, DeWittDomain(SuperSpace{1, 1}));
  CHECK(id11.component(0) == sf("x1", SuperSpace{1, 1}));
  CHECK(id11.component(1) == sf("t1", SuperSpace{1, 1}));
  Skeleton id02 = skeleton_identity(SuperSpace{0, 2}, DeWittDomain(SuperSpace{0, 2}));
  CHECK(id02.component(0) == sf("t1", SuperSpace{0, 2}));
  CHECK(id02.component(1) == sf("t2", SuperSpace{0, 2}));
}

TEST_CASE("skeletons validate parities") {
  const SuperSpace s{1, 1};
  DeWittDomain whole(s);
  CHECK_THROWS_AS(Skeleton(s, whole, s, whole, {sf("t1", s), sf("t1", s)}), ParityError);
  CHECK_THROWS_AS(Skeleton(s, whole, s, whole, {sf("x1", s)}), SpaceMismatch);
  Skeleton f(s, whole, s, whole, {sf("1/x1", s), sf("t1", s)});
  std::vector<Rational> zero{0};
  CHECK_FALSE(f.source_domain().contains_body(zero));
}
