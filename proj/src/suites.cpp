#include <superdom/atlas.hpp>
#include <superdom/calculus.hpp>
#include <superdom/cli.hpp>
#include <superdom/continuation.hpp>
#include <superdom/errors.hpp>
#include <superdom/morphisms.hpp>
#include <superdom/random.hpp>
#include <superdom/suites.hpp>
#include <superdom/text.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace superdom {

namespace {

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); }

bool coin(Rng& rng, unsigned one_in) { return uniform(rng, 1, one_in) == 1; }

SuperSpace nonempty_space(Rng& rng, unsigned max_even, unsigned max_odd) {
  SuperSpace s = random_space(rng, max_even, max_odd);
  if (s.total() == 0) s.even_dim = 1;
  return s;
}

std::string case_text(std::size_t i) { return "case " + std::to_string(i); }

CheckReport grassmann_laws(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "Grassmann laws";
  const unsigned n = 6;
  for (std::size_t i = 0; i < 500; ++i) {
    Parity pa = coin(rng, 2) ? Parity::even : Parity::odd;
    Parity pb = coin(rng, 2) ? Parity::even : Parity::odd;
    GrassmannElement a = random_grassmann(rng, n, pa, 5);
    GrassmannElement b = random_grassmann(rng, n, pb, 5);
    GrassmannElement c = random_grassmann(rng, n, coin(rng, 2) ? Parity::even : Parity::odd, 5);
    report.record((a * b) * c == a * (b * c), "associativity fails in " + case_text(i));
    report.record(a * (b + c) == a * b + a * c, "left distributivity fails in " + case_text(i));
    report.record((a + b) * c == a * c + b * c, "right distributivity fails in " + case_text(i));
    Rational sign = pa == Parity::odd && pb == Parity::odd ? -1 : 1;
    report.record(a * b == sign * (b * a), "supercommutativity fails in " + case_text(i));
  }
  const GrassmannElement one = GrassmannElement::scalar(5, 1);
  for (std::size_t i = 0; i < 100; ++i) {
    GrassmannElement a = random_grassmann(rng, 5, Parity::mixed, 6);
    if (a.body() == 0) a += GrassmannElement::scalar(5, random_nonzero_rational(rng));
    GrassmannElement inv = ginvert(a);
    report.record(a * inv == one && inv * a == one, "a * ginvert(a) != 1 in " + case_text(i));
    report.record(ginvert(inv) == a, "ginvert is not an involution in " + case_text(i));
  }
  return report;
}

CheckReport continuation_equivalence(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "continuation equivalence";
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < 200 && attempt < 1000; ++attempt) {
    bool rational = done < 20;
    Skeleton f = random_skeleton(rng, random_space(rng, 3, 3), nonempty_space(rng, 2, 2), 4, rational);
    auto x = random_point(rng, f.source_domain(), uniform(rng, 0, 6));
    if (!x) continue;
    report.record(eval_taylor(f, *x) == eval_subst(f, *x), "eval_taylor != eval_subst in " + case_text(done));
    ++done;
  }
  report.record(done == 200, "could not sample 200 cases");
  return report;
}

CheckReport exact_taylor(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "exact Taylor";
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < 100 && attempt < 1000; ++attempt) {
    SuperSpace s = nonempty_space(rng, 3, 3);
    Skeleton f = random_skeleton(rng, s, nonempty_space(rng, 2, 2), 4, coin(rng, 5));
    unsigned n = uniform(rng, 1, 6);
    auto x = random_point(rng, f.source_domain(), n);
    if (!x) continue;
    std::vector<unsigned> labels(n);
    std::iota(labels.begin(), labels.end(), 1U);
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(uniform(rng, 1, std::min(4U, n)));
    std::vector<LambdaPoint> increments;
    LambdaPoint moved = *x;
    for (unsigned label : labels) {
      increments.push_back(random_supported_point(rng, s, n, label));
      moved += increments.back();
    }
    LambdaPoint expected = eval_subst(f, moved) - eval_subst(f, *x);
    report.record(taylor_increment(f, *x, increments) == expected,
                  "taylor_increment != f(x + y) - f(x) in " + case_text(done));
    bool truncated = true;
    for (const auto& term : taylor_terms(f, *x, n + 2))
      if (term.m + term.k > n)
        for (const auto& c : term.value) truncated = truncated && c.is_zero();
    report.record(truncated, "nonzero Taylor term beyond order N in " + case_text(done));
    ++done;
  }
  report.record(done == 100, "could not sample 100 cases");
  return report;
}

CheckReport naturality_certificate(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "naturality and linearity";
  for (std::size_t i = 0; i < 100; ++i) {
    SuperSpace s = random_space(rng, 3, 3);
    Skeleton f = random_skeleton(rng, s, nonempty_space(rng, 2, 2), 3, coin(rng, 4));
    unsigned n = uniform(rng, 0, 5);
    std::vector<LambdaPoint> points;
    for (int k = 0; k < 2; ++k)
      if (auto x = random_point(rng, f.source_domain(), n)) points.push_back(std::move(*x));
    std::vector<GrassmannMorphism> morphisms = default_morphisms(n);
    morphisms.push_back(random_morphism(rng, n, uniform(rng, 0, 5)));
    CheckReport natural = check_naturality(f, morphisms, points);
    natural.skipped = 0;
    natural.notes.clear();
    report.merge(natural);
    std::vector<LinearitySample> samples;
    for (const auto& x : points)
      samples.push_back({x, random_vector_point(rng, s, n), random_grassmann(rng, n, Parity::even)});
    report.merge(check_lambda_linearity(f, samples));
  }
  return report;
}

CheckReport algebra_isomorphism(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "algebra isomorphism";
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < 100 && attempt < 1000; ++attempt) {
    SuperSpace s = random_space(rng, 3, 3);
    SuperFunction a = random_rational_superfunction(rng, s, Parity::mixed, 3);
    SuperFunction b = coin(rng, 2) ? random_rational_superfunction(rng, s, Parity::mixed, 3)
                                   : random_superfunction(rng, s, Parity::mixed, 3);
    auto x = random_point(rng, a.domain().intersect(b.domain()), uniform(rng, 0, 6));
    if (!x) continue;
    GrassmannElement ea = evaluate_superfunction(a, *x);
    GrassmannElement eb = evaluate_superfunction(b, *x);
    report.record(evaluate_superfunction(a * b, *x) == ea * eb, "continuation of a product in " + case_text(done));
    report.record(evaluate_superfunction(a + b, *x) == ea + eb, "continuation of a sum in " + case_text(done));
    ++done;
  }
  report.record(done == 100, "could not sample 100 cases");
  for (std::size_t i = 0; i < 200; ++i) {
    SuperSpace s = random_space(rng, 3, 4);
    SuperFunction a = coin(rng, 4) ? random_rational_superfunction(rng, s, Parity::mixed, 3, 4)
                                   : random_superfunction(rng, s, Parity::mixed, 3, 4);
    SuperFunction b = random_superfunction(rng, s, Parity::mixed, 3, 4);
    report.record(sf_mul_shuffle(a, b) == sf_mul_monomial(a, b), "shuffle != monomial product in " + case_text(i));
  }
  return report;
}

CheckReport composition(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "composition";
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < 100 && attempt < 400; ++attempt) {
    SuperSpace s = random_space(rng, 2, 2);
    SuperSpace t = nonempty_space(rng, 2, 2);
    SuperSpace u = nonempty_space(rng, 2, 2);
    Skeleton f = random_skeleton(rng, s, t, 3, coin(rng, 5));
    Skeleton g = random_skeleton(rng, t, u, 3, coin(rng, 8));
    try {
      Skeleton a = compose_subst(g, f);
      Skeleton b = compose_formula(g, f);
      CheckReport c = compare_skeletons(a, b, rng, 20);
      c.skipped = 0;
      c.notes.clear();
      report.merge(c);
      ++done;
    } catch (const DomainError&) {
      continue;
    }
  }
  report.record(done == 100, "could not build 100 composable pairs");
  for (std::size_t i = 0; i < 30; ++i) {
    SuperSpace s = random_space(rng, 2, 2);
    SuperSpace t = nonempty_space(rng, 2, 2);
    SuperSpace u = nonempty_space(rng, 2, 2);
    SuperSpace v = nonempty_space(rng, 2, 2);
    Skeleton f = random_skeleton(rng, s, t, 2);
    Skeleton g = random_skeleton(rng, t, u, 2);
    Skeleton h = random_skeleton(rng, u, v, 2);
    report.record(compose_subst(compose_subst(h, g), f) == compose_subst(h, compose_subst(g, f)),
                  "associativity of composition fails in " + case_text(i));
    report.record(compose_subst(f, skeleton_identity(s, f.source_domain())) == f,
                  "right identity law fails in " + case_text(i));
    report.record(compose_subst(skeleton_identity(t, DeWittDomain(t)), f) == f,
                  "left identity law fails in " + case_text(i));
  }
  return report;
}

CheckReport point_functor(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "point functor";
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < 100 && attempt < 1000; ++attempt) {
    SuperSpace s = random_space(rng, 3, 3);
    DeWittDomain domain = random_rational_superfunction(rng, s, Parity::even, 2).domain();
    unsigned n = uniform(rng, 0, 6);
    auto x = random_point(rng, domain, n);
    if (!x) continue;
    PointEvaluation mu = encode_point(domain, *x);
    std::vector<GrassmannElement> images;
    for (unsigned i = 0; i < s.even_dim; ++i) images.push_back(mu(SuperFunction::even_coordinate(s, i)));
    for (unsigned j = 0; j < s.odd_dim; ++j) images.push_back(mu(SuperFunction::odd_coordinate(s, j)));
    LambdaPoint y = decode_point(s, n, images, domain);
    report.record(y == *x, "decode(encode(x)) != x in " + case_text(done));
    SuperFunction h = random_rational_superfunction(rng, s, Parity::mixed, 3).restricted(domain);
    if (contains(h.domain(), *x))
      report.record(encode_point(domain, y)(h) == mu(h), "encode(decode(mu)) != mu in " + case_text(done));
    ++done;
  }
  report.record(done == 100, "could not sample 100 points");
  done = 0;
  for (std::size_t attempt = 0; done < 50 && attempt < 500; ++attempt) {
    SuperSpace s = random_space(rng, 3, 3);
    SuperFunction a = random_rational_superfunction(rng, s, Parity::mixed, 3);
    SuperFunction b = random_superfunction(rng, s, Parity::mixed, 3);
    DeWittDomain domain = a.domain().intersect(b.domain());
    auto x = random_point(rng, domain, uniform(rng, 0, 6));
    if (!x) continue;
    PointEvaluation mu = encode_point(domain, *x);
    report.record(mu(a * b) == mu(a) * mu(b), "encode is not multiplicative in " + case_text(done));
    report.record(mu(SuperFunction::constant(s, 1)) == GrassmannElement::scalar(x->rank(), 1),
                  "encode is not unital in " + case_text(done));
    ++done;
  }
  report.record(done == 50, "could not sample 50 triples");
  for (std::size_t i = 0; i < 20; ++i) {
    SuperSpace s = nonempty_space(rng, 2, 2);
    DeWittDomain domain(s);
    unsigned n = uniform(rng, 0, 4);
    auto x = random_point(rng, domain, n);
    PointEvaluation mu = encode_point(domain, *x);
    MorphismTable table;
    for (unsigned c = 0; c < s.total(); ++c) {
      SuperFunction coordinate =
          c < s.even_dim ? SuperFunction::even_coordinate(s, c) : SuperFunction::odd_coordinate(s, c - s.even_dim);
      table.push_back({coordinate, mu(coordinate)});
    }
    for (int k = 0; k < 3; ++k) {
      SuperFunction h = random_superfunction(rng, s, Parity::mixed, 3);
      table.push_back({h, mu(h)});
    }
    report.record(check_algebra_morphism(s, domain, n, table).ok(), "genuine evaluation table rejected");
    MorphismTable corrupted = table;
    auto& entry = corrupted[uniform(rng, s.total(), static_cast<unsigned>(table.size()) - 1)];
    entry.second += GrassmannElement::scalar(n, 1);
    report.record(!check_algebra_morphism(s, domain, n, corrupted).ok(), "corrupted table not detected");
  }
  return report;
}

CheckReport higher_derivatives(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "f^(k) family";
  for (std::size_t i = 0; i < 20; ++i) {
    Skeleton f = random_skeleton(rng, nonempty_space(rng, 2, 3), nonempty_space(rng, 2, 2), 4, coin(rng, 3));
    report.merge(check_derivative_symmetry(f, 2));
    report.merge(check_derivative_symmetry(f, 3));
  }
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < 100 && attempt < 1000; ++attempt) {
    SuperSpace s = nonempty_space(rng, 2, 2);
    Skeleton f = random_skeleton(rng, s, nonempty_space(rng, 1, 1), 3, coin(rng, 4));
    auto x = random_point(rng, f.source_domain(), uniform(rng, 0, 6));
    if (!x) continue;
    report.merge(check_def43(f, std::span<const LambdaPoint>(&*x, 1), rng, 2));
    ++done;
  }
  report.record(done == 100, "could not sample 100 cases");
  return report;
}

CheckReport gluing(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "gluing";
  GluingData g = builtin_projective_superline();
  CheckReport cocycle = check_cocycle(g, rng);
  report.record(cocycle.ok(), "projective superline fails the cocycle check");
  report.merge(cocycle);

  const SuperSpace s{1, 1};
  LambdaPoint example(s, 1, {GrassmannElement::scalar(1, 2)}, {GrassmannElement::generator(1, 1)});
  LambdaPoint expected(s, 1, {GrassmannElement::scalar(1, make_rational(1, 2))},
                       {GrassmannElement::monomial(1, MultiIndex::single(1), make_rational(1, 2))});
  report.record(transport(g, {"A", example}, "B") == ManifoldPoint{"B", expected}, "(2; t1) does not map to (1/2; t1/2)");
  report.record(transport(g, {"A", example}, "A") == ManifoldPoint{"A", example}, "transport to the same chart moves");

  std::size_t done = 0;
  for (std::size_t attempt = 0; done < 50 && attempt < 500; ++attempt) {
    auto x = random_point(rng, g.overlap("A", "B"), uniform(rng, 0, 5));
    if (!x) continue;
    ManifoldPoint there = transport(g, {"A", *x}, "B");
    const GrassmannElement& y = there.point.even_values()[0];
    GrassmannElement one = GrassmannElement::scalar(x->rank(), 1);
    report.record(y * x->even_values()[0] == one, "y != 1/x at a transported point");
    report.record(there.point.odd_values()[0] == x->odd_values()[0] * ginvert(x->even_values()[0]),
                  "eta != xi/x at a transported point");
    report.record(transport(g, there, "A") == ManifoldPoint{"A", *x}, "round trip A -> B -> A moves a point");
    ++done;
  }
  report.record(done == 50, "could not sample 50 points");

  report.record(check_global_morphism(g, g, projective_superline_square(), rng).ok(),
                "degree-2 self-map is not compatible across charts");
  const DeWittDomain whole(s);
  GlobalMorphism identity{{{"A", "A"}, skeleton_identity(s, whole)}, {{"B", "B"}, skeleton_identity(s, whole)}};
  report.record(check_global_morphism(g, g, identity, rng).ok(), "identity is not a global morphism");
  SuperFunction x = SuperFunction::even_coordinate(s, 0);
  SuperFunction xi = SuperFunction::odd_coordinate(s, 0);
  GlobalMorphism inconsistent{{{"A", "A"}, Skeleton(s, whole, s, whole, {x * x, x * xi})},
                              {{"B", "B"}, Skeleton(s, whole, s, whole, {x * x, x * xi})}};
  report.record(!check_global_morphism(g, g, inconsistent, rng).ok(), "inconsistent chart pair not detected");

  GluingData bad = g;
  const DeWittDomain punctured = g.overlap("B", "A");
  Skeleton wrong = g.transition("B", "A");
  SuperFunction eta = 2 * wrong.component(1);
  bad.set_transition("B", "A", Skeleton(s, punctured, s, punctured, {wrong.component(0), eta}));
  report.record(!check_cocycle(bad, rng, 5).ok(), "corrupted inverse transition not detected");

  GluingData line;
  const SuperSpace r{1, 0};
  for (const char* id : {"A", "B", "C"}) line.add_chart(id, r);
  SuperFunction t = SuperFunction::even_coordinate(r, 0);
  auto shift = [&](int by) {
    return Skeleton(r, DeWittDomain(r), r, DeWittDomain(r), {t + SuperFunction::constant(r, by)});
  };
  for (auto [i, j, by] : {std::tuple{"A", "B", 1}, {"B", "C", 1}, {"A", "C", 3}}) {
    line.set_overlap(i, j, DeWittDomain(r));
    line.set_overlap(j, i, DeWittDomain(r));
    line.set_transition(i, j, shift(by));
    line.set_transition(j, i, shift(-by));
  }
  CheckReport broken = check_cocycle(line, rng, 5);
  bool listed = false;
  for (const auto& f : broken.failures) listed = listed || f.find("(A,B,C)") != std::string::npos;
  report.record(!broken.ok() && listed, "corrupted cocycle not detected on its triple");
  return report;
}

CheckReport hadamard_and_taylor(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "Hadamard and Taylor polynomials";
  for (std::size_t i = 0; i < 50; ++i) {
    SuperSpace s = random_space(rng, 3, 2);
    if (s.even_dim == 0) s.even_dim = 1;
    Skeleton f = random_skeleton(rng, s, nonempty_space(rng, 2, 2), 4);
    std::vector<Rational> x0;
    for (unsigned k = 0; k < s.even_dim; ++k) x0.push_back(random_rational(rng));
    report.merge(check_hadamard(f, x0, hadamard_decompose(f, x0)));
  }
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < 50 && attempt < 500; ++attempt) {
    SuperSpace s = random_space(rng, 2, 3);
    Skeleton f = random_skeleton(rng, s, nonempty_space(rng, 2, 2), 4, coin(rng, 3));
    auto bodies = f.source_domain().sample(rng, 1);
    if (bodies.empty()) continue;
    unsigned n = uniform(rng, 0, 4);
    Skeleton p = taylor_polynomial(f, bodies.front(), n);
    report.record(p.is_polynomial(), "Taylor polynomial is not polynomial in " + case_text(done));
    report.merge(check_taylor_polynomial(f, p, bodies.front(), n));
    ++done;
  }
  report.record(done == 50, "could not sample 50 cases");
  return report;
}

class ScratchDir {
 public:
  explicit ScratchDir(std::uint64_t seed) {
    path_ = std::filesystem::temp_directory_path() /
            ("superdom-" + std::to_string(seed) + "-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ignored;
    std::filesystem::remove_all(path_, ignored);
  }
  std::string write(const std::string& name, const std::string& text) const {
    auto file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }

 private:
  std::filesystem::path path_;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

CheckReport command_line(std::uint64_t seed) {
  Rng rng(seed);
  CheckReport report;
  report.name = "command line";
  for (std::size_t i = 0; i < 500; ++i) {
    switch (i % 4) {
      case 0: {
        SuperSpace s = random_space(rng, 3, 3);
        SuperFunction f = coin(rng, 2) ? random_rational_superfunction(rng, s, Parity::mixed, 4, 4)
                                       : random_superfunction(rng, s, Parity::mixed, 4, 4);
        report.record(parse_superfunction(format_superfunction(f), s) == f,
                      "superfunction round trip fails for " + format_superfunction(f));
        break;
      }
      case 1: {
        GrassmannElement a = random_grassmann(rng, uniform(rng, 0, 6), Parity::mixed, 6);
        report.record(parse_grassmann(format_grassmann(a), a.rank()) == a,
                      "Grassmann round trip fails for " + format_grassmann(a));
        break;
      }
      case 2: {
        SuperSpace s = random_space(rng, 3, 3);
        LambdaPoint x = random_vector_point(rng, s, uniform(rng, 0, 6));
        report.record(parse_point(format_point(x), s) == x, "point round trip fails for\n" + format_point(x));
        break;
      }
      default: {
        Skeleton f = random_skeleton(rng, random_space(rng, 3, 3), random_space(rng, 2, 2), 3, coin(rng, 2));
        Skeleton g = parse_skeleton(format_skeleton(f));
        report.record(g == f && g.source_domain() == f.source_domain() && g.target_domain() == f.target_domain(),
                      "skeleton round trip fails for\n" + format_skeleton(f));
      }
    }
  }

  ScratchDir dir(seed);
  std::string g = dir.write("g.sk", "source 1|0\ntarget 1|0\ny1 = x1^2\n");
  std::string f = dir.write("f.sk", "source 1|2\ntarget 1|0\ny1 = x1 + t1*t2\n");
  CliRun both = cli({"compose", g, f, "--method", "both"});
  report.record(both.code == kExitOk && both.out.find("y1 = x1^2 + 2*x1*t1*t2") != std::string::npos,
                "compose --method both on the y^2 example: " + both.out + both.err);
  for (std::size_t i = 0; i < 10; ++i) {
    SuperSpace s = random_space(rng, 2, 2);
    SuperSpace t = nonempty_space(rng, 2, 2);
    std::string fi = dir.write("f" + std::to_string(i) + ".sk",
                               format_skeleton(random_skeleton(rng, s, t, 3, coin(rng, 3))));
    std::string gi = dir.write("g" + std::to_string(i) + ".sk",
                               format_skeleton(random_skeleton(rng, t, nonempty_space(rng, 2, 2), 3)));
    CliRun r = cli({"compose", gi, fi, "--method", "both"});
    report.record(r.code == kExitOk, "compose --method both diverges: " + r.err);
  }

  std::string id = dir.write("id.sk", "source 1|1\ntarget 1|1\ny1 = x1\nh1 = t1\n");
  std::string p = dir.write("p.pt", "rank 2\nx1 = 3 + 1*g1g2\nt1 = 1*g1 - 2*g2\n");
  CliRun echo = cli({"eval", id, p, "--method", "both"});
  report.record(echo.code == kExitOk && echo.out == read_file(p), "eval id.sk p.pt does not echo the point");

  std::string superline = dir.write("superline.man", format_manifold(builtin_projective_superline()));
  report.record(cli({"glue", "check", superline}).code == kExitOk, "glue check on the superline fails");
  std::string bad = dir.write("bad.man",
                              "chart A 1|0\nchart B 1|0\nchart C 1|0\n"
                              "transition A B\ny1 = x1 + 1\ntransition B A\ny1 = x1 - 1\n"
                              "transition B C\ny1 = x1 + 1\ntransition C B\ny1 = x1 - 1\n"
                              "transition A C\ny1 = x1 + 3\ntransition C A\ny1 = x1 - 3\n"
                              "overlap A B\noverlap B A\noverlap B C\noverlap C B\noverlap A C\noverlap C A\n");
  CliRun broken = cli({"glue", "check", bad});
  report.record(broken.code == kExitCheckFailed && broken.out.find("(A,B,C)") != std::string::npos,
                "glue check on a broken cocycle: exit " + std::to_string(broken.code));

  std::string divide = dir.write("divide.sk", "source 0|1\ntarget 1|0\ny1 = 1/t1\n");
  CliRun parse_error = cli({"eval", divide, p});
  report.record(parse_error.code == kExitUsage && parse_error.err.find("divisor has zero body part") != std::string::npos,
                "1/t1 is not rejected as a parse error");
  report.record(cli({}).code == kExitUsage, "missing subcommand is not a usage error");
  report.record(cli({"frobnicate"}).code == kExitUsage, "unknown subcommand is not a usage error");
  report.record(cli({"eval", id}).code == kExitUsage, "missing argument is not a usage error");
  report.record(cli({"--help"}).code == kExitOk, "--help does not exit 0");
  report.record(cli({"eval", id, dir.write("missing.pt", "x1 = 1/g1\n")}).code == kExitUsage,
                "malformed point is not a usage error");

  const char* previous = std::getenv("SUPERDOM_MAX_RANK");
  std::string saved = previous ? previous : "";
  setenv("SUPERDOM_MAX_RANK", "1", 1);
  CliRun capped = cli({"eval", id, p});
  if (previous)
    setenv("SUPERDOM_MAX_RANK", saved.c_str(), 1);
  else
    unsetenv("SUPERDOM_MAX_RANK");
  report.record(capped.code == kExitUsage && capped.err.find("SUPERDOM_MAX_RANK") != std::string::npos,
                "rank cap is not enforced");
  return report;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      {1, "Grassmann laws", 10, grassmann_laws},
      {2, "Continuation equivalence", 60, continuation_equivalence},
      {3, "Exact Taylor", 30, exact_taylor},
      {4, "Naturality and linearity", 60, naturality_certificate},
      {5, "Algebra isomorphism", 30, algebra_isomorphism},
      {6, "Composition formula", 120, composition},
      {7, "Point functor", 20, point_functor},
      {8, "Higher derivatives", 60, higher_derivatives},
      {9, "Gluing", 20, gluing},
      {10, "Hadamard and Taylor polynomials", 20, hadamard_and_taylor},
      {11, "Command line", 20, command_line},
  };
  return all;
}

CriterionOutcome run_criterion(const Criterion& c, std::uint64_t seed) {
  CriterionOutcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    o.report = c.run(seed + c.id);
  } catch (const std::exception& e) {
    o.report.fail(std::string("exception: ") + e.what());
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.passed = o.report.ok() && o.report.passed > 0 && o.seconds <= c.limit_seconds;
  return o;
}

std::string outcome_line(const Criterion& c, const CriterionOutcome& o) {
  std::ostringstream line;
  line << (o.passed ? "PASS " : "FAIL ") << c.id << " " << c.title << " (" << std::fixed << std::setprecision(2)
       << o.seconds << " s / " << std::setprecision(0) << c.limit_seconds << " s): ";
  if (!o.report.ok())
    line << o.report.failed << " failed, first: " << o.report.failures.front();
  else if (o.seconds > c.limit_seconds)
    line << "time limit exceeded";
  else
    line << o.report.passed << " checks";
  return line.str();
}

bool run_criteria(std::ostream& out, std::uint64_t seed, const std::vector<unsigned>& only) {
  bool all = true;
  for (const auto& c : acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionOutcome o = run_criterion(c, seed);
    all = all && o.passed;
    out << outcome_line(c, o) << std::endl;
  }
  return all;
}

}  // namespace superdom
