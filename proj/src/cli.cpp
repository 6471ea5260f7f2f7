#include <superdom/calculus.hpp>
#include <superdom/cli.hpp>
#include <superdom/continuation.hpp>
#include <superdom/errors.hpp>
#include <superdom/morphisms.hpp>
#include <superdom/random.hpp>
#include <superdom/suites.hpp>
#include <superdom/text.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace superdom {

unsigned max_rank_from_env() {
  const char* value = std::getenv("SUPERDOM_MAX_RANK");
  if (!value || !*value) return 8;
  std::string text(value);
  if (text.size() > 2 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      std::stoul(text) > kMaxRank)
    throw Error("SUPERDOM_MAX_RANK must be an integer in 0.." + std::to_string(kMaxRank) + ", got '" + text + "'");
  return static_cast<unsigned>(std::stoul(text));
}

namespace {

template <class Parse>
auto load(const std::string& path, Parse parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

Skeleton load_skeleton(const std::string& path) {
  return load(path, [](const std::string& text) { return parse_skeleton(text); });
}

LambdaPoint load_point(const std::string& path, SuperSpace space) {
  return load(path, [&](const std::string& text) { return parse_point(text, space); });
}

void check_rank(unsigned rank) {
  unsigned cap = max_rank_from_env();
  if (rank > cap)
    throw RankCapExceeded("rank " + std::to_string(rank) + " exceeds SUPERDOM_MAX_RANK=" + std::to_string(cap));
}

int print_report(const CheckReport& report, std::ostream& out) {
  out << report.summary() << "\n";
  for (const auto& f : report.failures) out << "  failure: " << f << "\n";
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
  return report.ok() ? kExitOk : kExitCheckFailed;
}

std::string direction_name(const Skeleton& f, unsigned b) {
  unsigned p = f.source().even_dim;
  return b < p ? "x" + std::to_string(b + 1) : "t" + std::to_string(b - p + 1);
}

std::string component_name(const Skeleton& f, unsigned i) {
  unsigned p = f.target().even_dim;
  return i < p ? "y" + std::to_string(i + 1) : "h" + std::to_string(i - p + 1);
}

std::vector<Rational> parse_body(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError&) {
      throw Error("--at: malformed rational '" + item + "'");
    }
  }
  return out;
}

struct CheckOptions {
  std::string kind;
  std::string skeleton;
  unsigned rank = 3;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  std::string point;
  std::string at;
  unsigned order = 2;
};

std::vector<LambdaPoint> check_points(const Skeleton& f, const CheckOptions& o, Rng& rng) {
  if (!o.point.empty()) {
    LambdaPoint x = load_point(o.point, f.source());
    check_rank(x.rank());
    if (!contains(f.source_domain(), x)) throw DomainError("point lies outside the source domain");
    return {x};
  }
  check_rank(o.rank);
  std::vector<LambdaPoint> out;
  for (std::size_t s = 0; s < o.samples; ++s)
    if (auto x = random_point(rng, f.source_domain(), o.rank)) out.push_back(std::move(*x));
  return out;
}

int run_check(const CheckOptions& o, std::ostream& out) {
  Skeleton f = load_skeleton(o.skeleton);
  Rng rng(o.seed);
  if (o.kind == "bgn") return print_report(check_bgn(f), out);
  if (o.kind == "taylor") {
    if (o.at.empty()) throw Error("check taylor needs --at");
    std::vector<Rational> x0 = parse_body(o.at);
    if (x0.size() != f.source().even_dim)
      throw Error("--at needs " + std::to_string(f.source().even_dim) + " coordinates");
    Skeleton p = taylor_polynomial(f, x0, o.order);
    out << format_skeleton(p);
    return print_report(check_taylor_polynomial(f, p, x0, o.order), out);
  }
  std::vector<LambdaPoint> points = check_points(f, o, rng);
  if (o.kind == "naturality") {
    unsigned rank = points.empty() ? o.rank : points.front().rank();
    return print_report(check_naturality(f, default_morphisms(rank), points), out);
  }
  if (o.kind == "linearity") {
    std::vector<LinearitySample> samples;
    for (const auto& x : points)
      samples.push_back({x, random_vector_point(rng, f.source(), x.rank()),
                         random_grassmann(rng, x.rank(), Parity::even)});
    return print_report(check_lambda_linearity(f, samples), out);
  }
  return print_report(check_def43(f, points, rng, o.order), out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact superdomain calculus: Grassmann algebras, skeletons, continuation and gluing.", "superdom");
  app.require_subcommand(1);

  std::string method = "subst";
  std::string skeleton, point, second;
  auto* eval = app.add_subcommand("eval", "Evaluate a skeleton at a lambda-point");
  eval->add_option("skeleton", skeleton, "Skeleton file")->required();
  eval->add_option("point", point, "Point file")->required();
  eval->add_option("--method", method, "subst, taylor or both")->check(CLI::IsMember({"subst", "taylor", "both"}));

  std::string compose_method = "subst";
  std::size_t compose_samples = 20;
  std::uint64_t compose_seed = 1;
  auto* compose = app.add_subcommand("compose", "Compose two skeletons, g o f");
  compose->add_option("g", skeleton, "Outer skeleton file")->required();
  compose->add_option("f", second, "Inner skeleton file")->required();
  compose->add_option("--method", compose_method, "subst, formula or both")
      ->check(CLI::IsMember({"subst", "formula", "both"}));
  compose->add_option("--samples", compose_samples, "Body points per comparison");
  compose->add_option("--seed", compose_seed, "Random seed");

  unsigned diff_order = 1;
  auto* diff = app.add_subcommand("diff", "All partial derivatives of a given order");
  diff->add_option("skeleton", skeleton, "Skeleton file")->required();
  diff->add_option("--order", diff_order, "Derivative order")->check(CLI::Range(0, 6));

  CheckOptions check_options;
  auto* check = app.add_subcommand("check", "Run a property battery on a skeleton");
  check->add_option("kind", check_options.kind, "naturality, bgn, linearity, def43 or taylor")
      ->required()
      ->check(CLI::IsMember({"naturality", "bgn", "linearity", "def43", "taylor"}));
  check->add_option("skeleton", check_options.skeleton, "Skeleton file")->required();
  check->add_option("--rank", check_options.rank, "Rank N of sampled points");
  check->add_option("--samples", check_options.samples, "Number of sampled points");
  check->add_option("--seed", check_options.seed, "Random seed");
  check->add_option("--point", check_options.point, "Use this point file instead of sampling");
  check->add_option("--at", check_options.at, "Expansion point for taylor, comma separated");
  check->add_option("--order", check_options.order, "Order for taylor and def43")->check(CLI::Range(0, 6));

  auto* glue = app.add_subcommand("glue", "Supermanifolds given by gluing data");
  glue->require_subcommand(1);
  std::string manifold, from_chart, to_chart;
  std::size_t glue_samples = 25;
  std::uint64_t glue_seed = 1;
  auto* glue_check = glue->add_subcommand("check", "Verify identity, inverse and cocycle laws");
  glue_check->add_option("manifold", manifold, "Manifold file")->required();
  glue_check->add_option("--samples", glue_samples, "Sampled points per law");
  glue_check->add_option("--seed", glue_seed, "Random seed");
  auto* glue_transport = glue->add_subcommand("transport", "Move a point between charts");
  glue_transport->add_option("manifold", manifold, "Manifold file")->required();
  glue_transport->add_option("from", from_chart, "Source chart")->required();
  glue_transport->add_option("point", point, "Point file")->required();
  glue_transport->add_option("to", to_chart, "Target chart")->required();

  std::uint64_t selftest_seed = 20240601;
  std::vector<unsigned> only;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance property suites");
  selftest->add_option("--seed", selftest_seed, "Random seed");
  selftest->add_option("--only", only, "Criterion numbers to run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      Skeleton f = load_skeleton(skeleton);
      LambdaPoint x = load_point(point, f.source());
      check_rank(x.rank());
      if (method == "both") {
        LambdaPoint a = eval_subst(f, x);
        if (a != eval_taylor(f, x)) {
          err << "error: substitution and Taylor evaluation disagree\n";
          return kExitCheckFailed;
        }
        out << format_point(a);
      } else {
        out << format_point(method == "subst" ? eval_subst(f, x) : eval_taylor(f, x));
      }
      return kExitOk;
    }
    if (*compose) {
      Skeleton g = load_skeleton(skeleton);
      Skeleton f = load_skeleton(second);
      if (g.source() != f.target())
        throw SpaceMismatch("cannot compose: g starts in " + g.source().to_string() + " but f ends in " +
                            f.target().to_string());
      if (compose_method == "both") {
        Skeleton a = compose_subst(g, f);
        Skeleton b = compose_formula(g, f);
        Rng rng(compose_seed);
        CheckReport report = compare_skeletons(a, b, rng, compose_samples);
        if (!report.ok()) {
          err << "error: substitution and composition formula disagree\n";
          for (const auto& m : report.failures) err << "  " << m << "\n";
          return kExitCheckFailed;
        }
        out << format_skeleton(a);
      } else {
        out << format_skeleton(compose_method == "subst" ? compose_subst(g, f) : compose_formula(g, f));
      }
      return kExitOk;
    }
    if (*diff) {
      Skeleton f = load_skeleton(skeleton);
      for (const auto& [tuple, values] : derivative(f, diff_order)) {
        std::string name = "d[";
        for (std::size_t i = 0; i < tuple.size(); ++i) name += (i ? "," : "") + direction_name(f, tuple[i]);
        name += "]";
        for (unsigned c = 0; c < values.size(); ++c)
          out << name << " " << component_name(f, c) << " = " << format_superfunction(values[c]) << "\n";
      }
      return kExitOk;
    }
    if (*check) return run_check(check_options, out);
    if (*glue_check) {
      GluingData g = load(manifold, [](const std::string& text) { return parse_manifold(text); });
      Rng rng(glue_seed);
      return print_report(check_cocycle(g, rng, glue_samples), out);
    }
    if (*glue_transport) {
      GluingData g = load(manifold, [](const std::string& text) { return parse_manifold(text); });
      LambdaPoint x = load_point(point, g.chart(from_chart).space);
      check_rank(x.rank());
      out << format_point(transport(g, ManifoldPoint{from_chart, x}, to_chart).point);
      return kExitOk;
    }
    if (*selftest) return run_criteria(out, selftest_seed, only) ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace superdom
