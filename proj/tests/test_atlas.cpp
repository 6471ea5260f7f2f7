#include "helpers.hpp"

#include <superdom/atlas.hpp>
#include <superdom/random.hpp>

#include <doctest.h>

#include <algorithm>

using namespace testing;

namespace {

const SuperSpace s11{1, 1};
const SuperSpace s10{1, 0};

bool mentions(const CheckReport& r, const std::string& text) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const std::string& f) { return f.find(text) != std::string::npos; });
}

GluingData shifted_line(const std::string& ac, const std::string& ca) {
  GluingData g;
  for (const char* id : {"A", "B", "C"}) g.add_chart(id, s10);
  auto link = [&](const char* i, const char* j, const std::string& there, const std::string& back) {
    g.set_overlap(i, j, DeWittDomain(s10));
    g.set_overlap(j, i, DeWittDomain(s10));
    g.set_transition(i, j, sk("source 1|0\ntarget 1|0\ny1 = " + there + "\n"));
    g.set_transition(j, i, sk("source 1|0\ntarget 1|0\ny1 = " + back + "\n"));
  };
  link("A", "B", "x1 + 1", "x1 - 1");
  link("B", "C", "x1 + 1", "x1 - 1");
  link("A", "C", ac, ca);
  return g;
}

}  // namespace

TEST_CASE("projective superline data") {
  GluingData g = builtin_projective_superline();
  CHECK(g.chart_ids() == std::vector<std::string>{"A", "B"});
  CHECK(g.has_overlap("A", "B"));
  std::vector<Rational> zero{0}, two{2};
  CHECK_FALSE(g.overlap("A", "B").contains_body(zero));
  CHECK(g.overlap("A", "B").contains_body(two));
  CHECK(g.overlap("A", "A").contains_body(zero));
  CHECK(g.transition("A", "A") == skeleton_identity(s11, DeWittDomain(s11)));
  Skeleton t = g.transition("A", "B");
  CHECK(t.component(0) == sf("1/x1", s11));
  CHECK(t.component(1) == sf("t1/x1", s11));
  CHECK(t.source_domain() == g.overlap("A", "B"));
  CHECK(t.target_domain() == g.overlap("B", "A"));
  CHECK_THROWS_AS(g.chart("Z"), Error);
  CHECK_THROWS_AS(g.add_chart("A", s11), Error);
}

TEST_CASE("cocycle check on the superline") {
  Rng rng(41);
  CheckReport report = check_cocycle(builtin_projective_superline(), rng);
  CHECK(report.ok());
  CHECK(report.passed > 10);
}

TEST_CASE("inverse law violation") {
  GluingData g;
  g.add_chart("A", s10);
  g.add_chart("B", s10);
  g.set_overlap("A", "B", DeWittDomain(s10));
  g.set_overlap("B", "A", DeWittDomain(s10));
  g.set_transition("A", "B", sk("source 1|0\ntarget 1|0\ny1 = x1\n"));
  g.set_transition("B", "A", sk("source 1|0\ntarget 1|0\ny1 = x1 + 1\n"));
  Rng rng(42);
  CheckReport report = check_cocycle(g, rng, 5);
  CHECK_FALSE(report.ok());
  CHECK(mentions(report, "inverse law (B,A) o (A,B)"));
}

TEST_CASE("cocycle on triples") {
  Rng rng(43);
  CHECK(check_cocycle(shifted_line("x1 + 2", "x1 - 2"), rng, 5).ok());
  CheckReport broken = check_cocycle(shifted_line("x1 + 3", "x1 - 3"), rng, 5);
  CHECK_FALSE(broken.ok());
  CHECK(mentions(broken, "cocycle on triple (A,B,C)"));
  CHECK_FALSE(mentions(broken, "inverse law"));
}

TEST_CASE("transport between charts") {
  GluingData g = builtin_projective_superline();
  LambdaPoint x = pt("rank 1\nx1 = 2\nt1 = g1\n", s11);
  ManifoldPoint there = transport(g, {"A", x}, "B");
  CHECK(there.chart == "B");
  CHECK(there.point == pt("rank 1\nx1 = 1/2\nt1 = 1/2*g1\n", s11));
  CHECK(transport(g, there, "A").point == x);
  CHECK(transport(g, {"A", x}, "A").point == x);

  LambdaPoint origin = pt("rank 2\nx1 = g1g2\nt1 = g1\n", s11);
  CHECK_THROWS_AS(transport(g, {"A", origin}, "B"), DomainError);
  CHECK_THROWS_AS(transport(g, {"A", x}, "Z"), Error);

  Rng rng(44);
  for (int i = 0; i < 20; ++i) {
    auto y = random_point(rng, g.overlap("A", "B"), 4);
    REQUIRE(y);
    ManifoldPoint b = transport(g, {"A", *y}, "B");
    CHECK(b.point.coordinate(0) * y->coordinate(0) == GrassmannElement::scalar(4, 1));
    CHECK(transport(g, b, "A").point == *y);
  }
}

TEST_CASE("global morphisms") {
  GluingData g = builtin_projective_superline();
  Rng rng(45);
  CHECK(check_global_morphism(g, g, projective_superline_square(), rng).ok());

  GlobalMorphism square = projective_superline_square();
  CHECK(square.at({"A", "A"}).component(1) == sf("x1*t1", s11));
  CHECK(square.at({"B", "B"}).component(1) == sf("t1", s11));

  Skeleton literal = sk("source 1|1\ntarget 1|1\ny1 = x1^2\nh1 = x1*t1\n");
  GlobalMorphism inconsistent{{{"A", "A"}, literal}, {{"B", "B"}, literal}};
  CHECK_FALSE(check_global_morphism(g, g, inconsistent, rng).ok());

  DeWittDomain whole(s11);
  GlobalMorphism identity{{{"A", "A"}, skeleton_identity(s11, whole)}, {{"B", "B"}, skeleton_identity(s11, whole)}};
  CHECK(check_global_morphism(g, g, identity, rng).ok());
}

TEST_CASE("manifold text round trip") {
  GluingData g = builtin_projective_superline();
  GluingData back = parse_manifold(format_manifold(g));
  CHECK(back.chart_ids() == g.chart_ids());
  CHECK(back.overlaps() == g.overlaps());
  CHECK(back.transition("A", "B") == g.transition("A", "B"));
  CHECK(back.transition("B", "A") == g.transition("B", "A"));
  Rng rng(46);
  CHECK(check_cocycle(back, rng, 5).ok());
}
