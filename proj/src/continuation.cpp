#include <superdom/continuation.hpp>
#include <superdom/errors.hpp>
#include <superdom/multilinear.hpp>

#include <numeric>

namespace superdom {

GrassmannElement evaluate_superfunction(const SuperFunction& h, const LambdaPoint& x) {
  if (h.space() != x.space())
    throw SpaceMismatch("superfunction on R^" + h.space().to_string() + " evaluated at a point of R^" +
                        x.space().to_string());
  const unsigned rank = x.rank();
  auto lift = [rank](const Rational& r) { return GrassmannElement::scalar(rank, r); };
  std::span<const GrassmannElement> evens(x.even_values());
  std::vector<std::pair<const Polynomial*, GrassmannElement>> inverses;
  GrassmannElement total(rank);
  for (const auto& [j, c] : h.terms()) {
    GrassmannElement value = evaluate_in<GrassmannElement>(c.numerator(), evens, lift);
    if (!c.is_polynomial()) {
      const GrassmannElement* inverse = nullptr;
      for (const auto& [base, inv] : inverses)
        if (*base == c.denominator_base()) inverse = &inv;
      if (!inverse) {
        GrassmannElement b = evaluate_in<GrassmannElement>(c.denominator_base(), evens, lift);
        if (b.body() == 0) throw DomainError("a denominator has zero body at the evaluation point");
        inverses.emplace_back(&c.denominator_base(), ginvert(b));
        inverse = &inverses.back().second;
      }
      value = value * gpow(*inverse, c.denominator_exponent());
    }
    for (unsigned label : j.labels()) value = value * x.odd_values()[label - 1];
    total += value;
  }
  return total;
}

LambdaPoint eval_subst(const Skeleton& f, const LambdaPoint& x) {
  if (!contains(f.source_domain(), x)) throw DomainError("point body lies outside the source domain");
  std::vector<GrassmannElement> even, odd;
  for (unsigned i = 0; i < f.components().size(); ++i) {
    GrassmannElement v = evaluate_superfunction(f.component(i), x);
    (i < f.target().even_dim ? even : odd).push_back(std::move(v));
  }
  return LambdaPoint(f.target(), x.rank(), std::move(even), std::move(odd));
}

namespace {

struct SoulVectors {
  SuperVector even_soul;
  SuperVector odd_part;
  SuperVector full;
};

SoulVectors soul_vectors(const LambdaPoint& x) {
  const SuperSpace& s = x.space();
  SoulVectors v;
  PointSplit parts = split(x);
  GrassmannElement zero(x.rank());
  for (unsigned i = 0; i < s.even_dim; ++i) {
    v.even_soul.push_back(parts.even_soul[i]);
    v.odd_part.push_back(zero);
    v.full.push_back(parts.even_soul[i]);
  }
  for (unsigned j = 0; j < s.odd_dim; ++j) {
    v.even_soul.push_back(zero);
    v.odd_part.push_back(parts.odd_part[j]);
    v.full.push_back(parts.odd_part[j]);
  }
  return v;
}

void add_weighted(SuperVector& total, const SuperVector& term, const Rational& weight) {
  for (std::size_t i = 0; i < total.size(); ++i) total[i] += weight * term[i];
}

SuperVector zero_vector(std::size_t size, unsigned rank) { return SuperVector(size, GrassmannElement(rank)); }

}  // namespace

std::vector<TaylorTerm> taylor_terms(const Skeleton& f, const LambdaPoint& x, unsigned max_order) {
  if (x.space() != f.source()) throw SpaceMismatch("point does not lie in the source space");
  if (!contains(f.source_domain(), x)) throw DomainError("point body lies outside the source domain");
  Jet jet(f, x.body());
  SoulVectors souls = soul_vectors(x);
  std::vector<TaylorTerm> terms;
  std::vector<const SuperVector*> args;
  for (unsigned order = 0; order <= max_order; ++order)
    for (unsigned m = 0; m <= order; ++m) {
      unsigned k = order - m;
      args.assign(m, &souls.even_soul);
      args.insert(args.end(), k, &souls.odd_part);
      SuperVector value = jet.apply(args, x.rank());
      Rational weight = 1 / (factorial(m) * factorial(k));
      for (auto& c : value) c *= weight;
      terms.push_back({m, k, std::move(value)});
    }
  return terms;
}

LambdaPoint eval_taylor(const Skeleton& f, const LambdaPoint& x) {
  SuperVector total = zero_vector(f.target().total(), x.rank());
  for (const auto& term : taylor_terms(f, x, x.rank())) add_weighted(total, term.value, 1);
  return LambdaPoint::from_vector(f.target(), total).with_rank(x.rank());
}

SuperVector family_fk(const Skeleton& f, const LambdaPoint& x, std::span<const SuperVector> args) {
  if (x.space() != f.source()) throw SpaceMismatch("point does not lie in the source space");
  if (!contains(f.source_domain(), x)) throw DomainError("point body lies outside the source domain");
  Jet jet(f, x.body());
  SoulVectors souls = soul_vectors(x);
  SuperVector total = zero_vector(f.target().total(), x.rank());
  std::vector<const SuperVector*> pointers;
  for (unsigned m = 0; m <= x.rank(); ++m) {
    pointers.assign(m, &souls.full);
    for (const auto& a : args) pointers.push_back(&a);
    add_weighted(total, jet.apply(pointers, x.rank()), 1 / factorial(m));
  }
  return total;
}

std::vector<GrassmannMorphism> default_morphisms(unsigned rank) {
  std::vector<GrassmannMorphism> out;
  out.push_back(GrassmannMorphism::counit(rank));
  if (rank >= 2) {
    std::vector<unsigned> swap(rank), cycle(rank), reversal(rank);
    std::iota(swap.begin(), swap.end(), 1U);
    std::swap(swap[0], swap[1]);
    for (unsigned i = 0; i < rank; ++i) {
      cycle[i] = (i + 1) % rank + 1;
      reversal[i] = rank - i;
    }
    out.push_back(GrassmannMorphism::permutation(swap));
    out.push_back(GrassmannMorphism::permutation(cycle));
    out.push_back(GrassmannMorphism::permutation(reversal));
  }
  if (rank >= 1) {
    out.push_back(GrassmannMorphism::scaling(rank, 1, make_rational(3, 2)));
    out.push_back(GrassmannMorphism::scaling(rank, rank, -2));
    out.push_back(GrassmannMorphism::kill(rank, 1));
    out.push_back(GrassmannMorphism::kill(rank, rank));
    out.push_back(GrassmannMorphism::truncation(rank, rank - 1));
  }
  if (rank >= 4) {
    std::vector<GrassmannElement> cubic, shifted;
    for (unsigned i = 1; i <= rank; ++i) {
      cubic.push_back(GrassmannElement::generator(rank, i));
      shifted.push_back(GrassmannElement::generator(rank, i));
    }
    cubic[0] = GrassmannElement::monomial(rank, MultiIndex::from_labels(std::vector<unsigned>{2, 3, 4}), 1);
    shifted[rank - 1] += GrassmannElement::monomial(rank, MultiIndex::from_labels(std::vector<unsigned>{1, 2, 3}), 1);
    out.emplace_back(rank, rank, std::move(cubic));
    out.emplace_back(rank, rank, std::move(shifted));
  }
  out.push_back(GrassmannMorphism::inclusion(rank, rank + 1));
  return out;
}

CheckReport check_naturality(const Skeleton& f, std::span<const GrassmannMorphism> morphisms,
                             std::span<const LambdaPoint> samples) {
  CheckReport report;
  report.name = "naturality";
  for (const auto& x : samples) {
    LambdaPoint fx = eval_subst(f, x);
    for (std::size_t mi = 0; mi < morphisms.size(); ++mi) {
      const auto& m = morphisms[mi];
      if (m.source_rank() != x.rank()) {
        report.skip("morphism " + std::to_string(mi) + " does not act on rank " + std::to_string(x.rank()));
        continue;
      }
      LambdaPoint mx = point_map(m, x);
      if (!contains(f.source_domain(), mx)) {
        report.skip("morphism " + std::to_string(mi) + " moves a sample out of the domain");
        continue;
      }
      LambdaPoint expected = point_map(m, fx);
      report.record(eval_subst(f, mx) == expected,
                    "substitution route is not natural under morphism " + std::to_string(mi));
      report.record(eval_taylor(f, mx) == expected,
                    "Taylor route is not natural under morphism " + std::to_string(mi));
    }
  }
  return report;
}

MultiIndex::Mask common_generators(const SuperVector& v) {
  MultiIndex::Mask mask = ~MultiIndex::Mask{0};
  for (const auto& c : v)
    for (const auto& [index, coefficient] : c.terms()) mask &= index.mask();
  return mask;
}

LambdaPoint taylor_increment(const Skeleton& f, const LambdaPoint& x, std::span<const LambdaPoint> increments) {
  std::vector<SuperVector> ys;
  LambdaPoint end = x;
  for (std::size_t i = 0; i < increments.size(); ++i) {
    const auto& y = increments[i];
    if (y.space() != x.space()) throw SpaceMismatch("increment lives in a different space");
    if (y.rank() != x.rank()) throw RankMismatch("increment has a different rank");
    ys.push_back(y.as_vector());
    if (common_generators(ys.back()) == 0)
      throw Error("increment " + std::to_string(i + 1) + " is not supported on a single generator");
    end += y;
  }
  if (!contains(f.source_domain(), x) || !contains(f.source_domain(), end))
    throw DomainError("increment leaves the source domain");
  SuperVector total = zero_vector(f.target().total(), x.rank());
  const std::size_t count = ys.size();
  std::vector<SuperVector> chosen;
  for (std::size_t subset = 1; subset < (std::size_t{1} << count); ++subset) {
    chosen.clear();
    for (std::size_t i = 0; i < count; ++i)
      if ((subset >> i) & 1U) chosen.push_back(ys[i]);
    add_weighted(total, family_fk(f, x, chosen), 1);
  }
  return LambdaPoint::from_vector(f.target(), total).with_rank(x.rank());
}

}  // namespace superdom
