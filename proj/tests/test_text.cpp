#include "helpers.hpp"

#include <superdom/random.hpp>

#include <doctest.h>

using namespace testing;

namespace {

const SuperSpace s12{1, 2};

}  // namespace

TEST_CASE("expressions normalize") {
  SuperFunction f = sf("x1^2 + x1*t1*t2", s12);
  CHECK(f.is_even());
  CHECK(f.terms().size() == 2);
  CHECK(sf("t2*t1", s12) == -sf("t1*t2", s12));
  CHECK(sf("t1*t1", s12).is_zero());
  CHECK(sf("x1 t1 t2", s12) == sf("x1*t1*t2", s12));
  CHECK(sf("2 x1", s12) == sf("2*x1", s12));
  CHECK(sf("(x1 + 1)^2 - x1^2 - 2*x1", s12) == sf("1", s12));
  CHECK(sf("-t1*-t2", s12) == sf("t1*t2", s12));
  CHECK(parse_superfunction("x2*t3").space() == SuperSpace{2, 3});
  CHECK(parse_space("2|3") == SuperSpace{2, 3});
  CHECK_THROWS_AS(parse_space("2,3"), ParseError);
}

TEST_CASE("grassmann expressions") {
  CHECK(ge("g2g1", 2) == -ge("g1g2", 2));
  CHECK(ge("g1*g2", 2) == ge("g1g2", 2));
  CHECK(ge("1/(1 + g1g2)", 2) == ge("1 - g1g2", 2));
  CHECK(parse_grassmann("g3").rank() == 3);
  CHECK_THROWS_AS(ge("g3", 2), ParseError);
  CHECK_THROWS_AS(ge("1/g1", 2), ParseError);
}

TEST_CASE("positioned diagnostics") {
  try {
    sf("1/t1", s12);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("divisor has zero body part") != std::string::npos);
    CHECK(e.line() == 1);
    CHECK(e.column() == 2);
  }
  try {
    sk("source 1|1\ntarget 1|0\n\ny1 = x1 + )\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(sk("source 1|1\ntarget 1|0\ny1 = t1\n"), ParseError);
  CHECK_THROWS_AS(sk("source 1|1\ntarget 1|0\n"), ParseError);
  CHECK_THROWS_AS(sk("source 1|1\ntarget 1|0\ny1 = x1\ny1 = x1\n"), ParseError);
  CHECK_THROWS_AS(sk("source 1|1\ntarget 1|0\ny1 = x2\n"), ParseError);
  CHECK_THROWS_AS(sk("source 1|1\ntarget 1|0\ny2 = x1\n"), ParseError);
  CHECK_THROWS_AS(sf("x1 +", s12), ParseError);
  CHECK_THROWS_AS(sf("x1 ^ -1", s12), ParseError);
}

TEST_CASE("formatting") {
  CHECK(format_superfunction(-sf("t1*t2", s12)) == "-1*t1*t2");
  CHECK(format_superfunction(SuperFunction(s12)) == "0");
  CHECK(format_superfunction(sf("x1^2 + 2*x1*t1*t2", s12)) == "x1^2 + 2*x1*t1*t2");
  CHECK(format_grassmann(ge("3 + g1g2 - 2*g1", 2)) == "3 - 2*g1 + 1*g1g2");
  CHECK(format_grassmann(GrassmannElement(2)) == "0");
}

TEST_CASE("superfunction round trip") {
  Rng rng(51);
  for (int i = 0; i < 300; ++i) {
    SuperSpace s = random_space(rng, 3, 3);
    SuperFunction f = i % 3 == 0 ? random_rational_superfunction(rng, s, Parity::mixed, 3, 4)
                                 : random_superfunction(rng, s, Parity::mixed, 3, 4);
    SuperFunction back = parse_superfunction(format_superfunction(f), s);
    CHECK(back == f);
  }
}

TEST_CASE("grassmann round trip") {
  Rng rng(52);
  for (int i = 0; i < 200; ++i) {
    GrassmannElement a = random_grassmann(rng, 6, Parity::mixed, 6);
    CHECK(parse_grassmann(format_grassmann(a), 6) == a);
  }
}

TEST_CASE("skeleton round trip keeps domains") {
  Skeleton f = sk(
      "# comment\n"
      "source 2|1\n"
      "target 1|1\n"
      "box 0 inf -1 1\n"
      "box -inf -2 -1 1\n"
      "exclude x1 - x2\n"
      "target-box 0 inf\n"
      "y1 = 1/(x1 - x2) + x1^2\n"
      "h1 = x2*t1\n");
  Skeleton back = sk(format_skeleton(f));
  CHECK(back == f);
  CHECK(back.source_domain() == f.source_domain());
  CHECK(back.target_domain() == f.target_domain());
  CHECK(f.source_domain().boxes().size() == 2);

  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    Skeleton g = random_skeleton(rng, random_space(rng, 2, 2), random_space(rng, 2, 2), 3, i % 2 == 0);
    Skeleton h = sk(format_skeleton(g));
    CHECK(h == g);
    CHECK(h.source_domain() == g.source_domain());
    CHECK(format_skeleton(h) == format_skeleton(g));
  }
}

TEST_CASE("point round trip") {
  LambdaPoint x = pt("rank 3\nx1 = 3 + g1g2\nt1 = g1 - 1/2*g2g3g1\n", s12);
  CHECK(x.rank() == 3);
  CHECK(x.coordinate(2).is_zero());
  CHECK(pt(format_point(x), s12) == x);
  CHECK_THROWS_AS(pt("x1 = g1\n", s12), ParseError);
  CHECK_THROWS_AS(pt("x3 = 1\n", s12), ParseError);

  Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    SuperSpace s = random_space(rng, 3, 3);
    LambdaPoint y = random_vector_point(rng, s, 5);
    CHECK(parse_point(format_point(y), s) == y);
  }
}
