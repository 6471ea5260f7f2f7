#include <superdom/atlas.hpp>
#include <superdom/continuation.hpp>
#include <superdom/errors.hpp>
#include <superdom/morphisms.hpp>
#include <superdom/random.hpp>

namespace superdom {

void GluingData::add_chart(const std::string& id, SuperSpace space, DeWittDomain domain) {
  if (domain.space() != space) throw SpaceMismatch("chart " + id + ": domain lives in another space");
  if (!charts_.emplace(id, Chart{space, std::move(domain)}).second) throw Error("chart '" + id + "' added twice");
}

const Chart& GluingData::chart(const std::string& id) const {
  auto it = charts_.find(id);
  if (it == charts_.end()) throw Error("unknown chart '" + id + "'");
  return it->second;
}

std::vector<std::string> GluingData::chart_ids() const {
  std::vector<std::string> ids;
  for (const auto& [id, c] : charts_) ids.push_back(id);
  return ids;
}

void GluingData::set_overlap(const std::string& i, const std::string& j, DeWittDomain domain) {
  const Chart& c = chart(i);
  chart(j);
  if (domain.space() != c.space) throw SpaceMismatch("overlap " + i + " " + j + " lives in another space");
  overlaps_[{i, j}] = c.domain.intersect(domain);
}

void GluingData::set_transition(const std::string& i, const std::string& j, const Skeleton& transition) {
  if (transition.source() != chart(i).space || transition.target() != chart(j).space)
    throw SpaceMismatch("transition " + i + " " + j + " does not map chart " + i + " to chart " + j);
  transitions_[{i, j}] = transition;
}

bool GluingData::has_overlap(const std::string& i, const std::string& j) const {
  return (i == j && has_chart(i)) || overlaps_.count({i, j}) > 0;
}

DeWittDomain GluingData::overlap(const std::string& i, const std::string& j) const {
  auto it = overlaps_.find({i, j});
  if (it != overlaps_.end()) return it->second;
  if (i == j) return chart(i).domain;
  throw Error("charts " + i + " and " + j + " do not overlap");
}

bool GluingData::has_transition(const std::string& i, const std::string& j) const {
  return (i == j && has_chart(i)) || transitions_.count({i, j}) > 0;
}

Skeleton GluingData::transition(const std::string& i, const std::string& j) const {
  auto it = transitions_.find({i, j});
  if (it == transitions_.end()) {
    if (i != j) throw Error("no transition from chart " + i + " to chart " + j);
    return skeleton_identity(chart(i).space, overlap(i, i));
  }
  Skeleton t = it->second.with_source_domain(overlap(i, j));
  return has_overlap(j, i) ? t.with_target_domain(overlap(j, i)) : t;
}

namespace {

std::string pair_text(const std::string& i, const std::string& j) { return "(" + i + "," + j + ")"; }

std::vector<LambdaPoint> sample_points(const DeWittDomain& domain, std::mt19937_64& rng, std::size_t count) {
  std::vector<LambdaPoint> out;
  for (std::size_t s = 0; s < count; ++s) {
    unsigned rank = static_cast<unsigned>(s % 5);
    if (auto x = random_point(rng, domain, rank)) out.push_back(std::move(*x));
  }
  return out;
}

/// Symbolic equality of two routes, each given as a thunk producing a skeleton.
template <class Left, class Right>
void compare_symbolic(CheckReport& report, Left left, Right right, const std::string& what) {
  try {
    report.record(left() == right(), what + " fails symbolically");
  } catch (const Error& e) {
    report.fail(what + " could not be composed: " + e.what());
  }
}

/// Both routes at every point; a route that leaves its domain is a failure
/// when `strict`, a skip otherwise. Mismatches are summarized in one line.
template <class Left, class Right>
void compare_at(CheckReport& report, const std::vector<LambdaPoint>& points, Left left, Right right,
                const std::string& what, bool strict) {
  std::size_t mismatched = 0, outside = 0;
  std::string first_error;
  for (const auto& x : points) {
    try {
      if (left(x) == right(x))
        report.pass();
      else
        ++mismatched;
    } catch (const DomainError& e) {
      if (strict && first_error.empty()) first_error = e.what();
      ++outside;
    }
  }
  std::string of = " of " + std::to_string(points.size()) + " sampled points";
  if (mismatched) {
    report.fail(what + " fails at " + std::to_string(mismatched) + of);
    report.failed += mismatched - 1;
  }
  if (outside && strict) {
    report.fail(what + ": " + first_error + " at " + std::to_string(outside) + of);
    report.failed += outside - 1;
  } else if (outside) {
    report.skip(what + ": " + std::to_string(outside) + of + " outside a domain");
    report.skipped += outside - 1;
  }
}

}  // namespace

CheckReport check_cocycle(const GluingData& g, std::mt19937_64& rng, std::size_t samples) {
  CheckReport report;
  report.name = "cocycle";
  for (const auto& [key, t] : g.transitions()) {
    const auto& [i, j] = key;
    if (i == j) {
      Skeleton id = skeleton_identity(g.chart(i).space, g.overlap(i, i));
      report.record(t == id, "identity law fails for " + pair_text(i, i));
      continue;
    }
    if (!g.has_transition(j, i)) {
      report.fail("missing inverse transition " + pair_text(j, i));
      continue;
    }
    Skeleton there = g.transition(i, j);
    Skeleton back = g.transition(j, i);
    const std::string what = "inverse law " + pair_text(j, i) + " o " + pair_text(i, j);
    compare_symbolic(
        report, [&] { return compose_subst(back, there); },
        [&] { return skeleton_identity(there.source(), there.source_domain()); }, what);
    DeWittDomain arrival = g.has_overlap(j, i) ? g.overlap(j, i) : g.chart(j).domain;
    compare_at(
        report, sample_points(g.overlap(i, j), rng, samples),
        [&](const LambdaPoint& x) {
          LambdaPoint y = eval_subst(there, x);
          if (!contains(arrival, y)) throw DomainError("transition " + pair_text(i, j) + " leaves the overlap");
          return eval_subst(back, y);
        },
        [](const LambdaPoint& x) { return x; }, what, true);
  }
  const auto ids = g.chart_ids();
  for (const auto& a : ids)
    for (const auto& b : ids)
      for (const auto& c : ids) {
        if (a == b || b == c || a == c) continue;
        if (!g.has_transition(a, b) || !g.has_transition(b, c) || !g.has_transition(a, c)) continue;
        Skeleton ab = g.transition(a, b);
        Skeleton bc = g.transition(b, c);
        Skeleton ac = g.transition(a, c);
        const std::string what = "cocycle on triple (" + a + "," + b + "," + c + ")";
        compare_symbolic(report, [&] { return compose_subst(bc, ab); }, [&] { return ac; }, what);
        DeWittDomain common = g.overlap(a, b).intersect(g.overlap(a, c));
        compare_at(
            report, sample_points(common, rng, samples),
            [&](const LambdaPoint& x) {
              LambdaPoint y = eval_subst(ab, x);
              if (!contains(bc.source_domain(), y)) throw DomainError("outside the triple overlap");
              return eval_subst(bc, y);
            },
            [&](const LambdaPoint& x) { return eval_subst(ac, x); }, what, false);
      }
  report.notes.push_back("Hausdorff property not checked");
  return report;
}

ManifoldPoint transport(const GluingData& g, const ManifoldPoint& mp, const std::string& to_chart) {
  g.chart(to_chart);
  if (!contains(g.chart(mp.chart).domain, mp.point))
    throw DomainError("point lies outside chart " + mp.chart);
  if (to_chart == mp.chart) return mp;
  if (!g.has_overlap(mp.chart, to_chart) || !contains(g.overlap(mp.chart, to_chart), mp.point))
    throw DomainError("body lies outside the overlap " + pair_text(mp.chart, to_chart));
  return ManifoldPoint{to_chart, eval_subst(g.transition(mp.chart, to_chart), mp.point)};
}

CheckReport check_global_morphism(const GluingData& g1, const GluingData& g2, const GlobalMorphism& components,
                                  std::mt19937_64& rng, std::size_t samples) {
  CheckReport report;
  report.name = "global morphism";
  for (const auto& [first, f_ik] : components)
    for (const auto& [second, f_jl] : components) {
      const auto& [i, k] = first;
      const auto& [j, l] = second;
      if (i == j && k == l) continue;
      if (!g1.has_overlap(i, j) || !g1.has_transition(i, j) || !g2.has_transition(k, l)) continue;
      Skeleton t1 = g1.transition(i, j);
      Skeleton t2 = g2.transition(k, l);
      const std::string what = "f" + pair_text(j, l) + " o phi" + pair_text(i, j) + " vs psi" + pair_text(k, l) +
                               " o f" + pair_text(i, k);
      compare_symbolic(report, [&] { return compose_subst(t2, f_ik); }, [&] { return compose_subst(f_jl, t1); },
                       what);
      DeWittDomain common = g1.overlap(i, j).intersect(f_ik.source_domain());
      compare_at(
          report, sample_points(common, rng, samples),
          [&](const LambdaPoint& x) {
            LambdaPoint y = eval_subst(f_ik, x);
            if (!contains(t2.source_domain(), y)) throw DomainError("image outside the target overlap");
            return eval_subst(t2, y);
          },
          [&](const LambdaPoint& x) {
            LambdaPoint y = eval_subst(t1, x);
            if (!contains(f_jl.source_domain(), y)) throw DomainError("outside the second chart's domain");
            return eval_subst(f_jl, y);
          },
          what, false);
    }
  return report;
}

GluingData builtin_projective_superline() {
  const SuperSpace s{1, 1};
  GluingData g;
  g.add_chart("A", s);
  g.add_chart("B", s);
  const Polynomial x = Polynomial::variable(1, 0);
  const DeWittDomain punctured = DeWittDomain(s).excluding(x);
  g.set_overlap("A", "B", punctured);
  g.set_overlap("B", "A", punctured);
  const CoeffFn inverse = CoeffFn::quotient(Polynomial::constant(1, 1), x);
  SuperFunction y = SuperFunction::term(s, MultiIndex(), inverse).with_domain(punctured);
  SuperFunction eta = SuperFunction::term(s, MultiIndex::single(1), inverse).with_domain(punctured);
  Skeleton t(s, punctured, s, punctured, {y, eta});
  g.set_transition("A", "B", t);
  g.set_transition("B", "A", t);
  return g;
}

GlobalMorphism projective_superline_square() {
  const SuperSpace s{1, 1};
  const DeWittDomain whole(s);
  SuperFunction x = SuperFunction::even_coordinate(s, 0);
  SuperFunction xi = SuperFunction::odd_coordinate(s, 0);
  Skeleton on_a(s, whole, s, whole, {x * x, x * xi});
  Skeleton on_b(s, whole, s, whole, {x * x, xi});
  return GlobalMorphism{{{"A", "A"}, on_a}, {{"B", "B"}, on_b}};
}

}  // namespace superdom
