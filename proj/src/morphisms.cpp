#include <superdom/continuation.hpp>
#include <superdom/errors.hpp>
#include <superdom/morphisms.hpp>
#include <superdom/multilinear.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace superdom {

SuperFunction sf_substitute(const SuperFunction& h, SuperSpace space, const DeWittDomain& domain,
                            std::span<const SuperFunction> even_images, std::span<const SuperFunction> odd_images) {
  if (even_images.size() != h.space().even_dim || odd_images.size() != h.space().odd_dim)
    throw SpaceMismatch("substitution needs one image per coordinate of R^" + h.space().to_string());
  const DeWittDomain base_domain = domain.with_space(space);
  auto lift = [&](const Rational& r) { return SuperFunction::constant(space, r).with_domain(base_domain); };
  std::vector<std::pair<const Polynomial*, SuperFunction>> inverses;
  SuperFunction total(space, base_domain);
  for (const auto& [j, c] : h.terms()) {
    SuperFunction value = evaluate_in<SuperFunction>(c.numerator(), even_images, lift);
    if (!c.is_polynomial()) {
      const SuperFunction* inverse = nullptr;
      for (const auto& [b, inv] : inverses)
        if (*b == c.denominator_base()) inverse = &inv;
      if (!inverse) {
        SuperFunction b = evaluate_in<SuperFunction>(c.denominator_base(), even_images, lift);
        if (b.body().is_zero()) throw DomainError("denominator body is identically zero after substitution");
        inverses.emplace_back(&c.denominator_base(), sf_invert(b));
        inverse = &inverses.back().second;
      }
      value = value * sf_power(*inverse, c.denominator_exponent());
    }
    for (unsigned label : j.labels()) value = value * odd_images[label - 1];
    total = total + value;
  }
  return total;
}

namespace {

std::vector<SuperFunction> even_components(const Skeleton& f) {
  return {f.components().begin(), f.components().begin() + f.target().even_dim};
}

std::vector<SuperFunction> odd_components(const Skeleton& f) {
  return {f.components().begin() + f.target().even_dim, f.components().end()};
}

void require_composable(const Skeleton& g, const Skeleton& f) {
  if (f.target() != g.source())
    throw SpaceMismatch("cannot compose: f maps into R^" + f.target().to_string() + " but g starts on R^" +
                        g.source().to_string());
}

}  // namespace

Skeleton compose_subst(const Skeleton& g, const Skeleton& f) {
  require_composable(g, f);
  auto evens = even_components(f);
  auto odds = odd_components(f);
  std::vector<SuperFunction> components;
  for (const auto& h : g.components())
    components.push_back(sf_substitute(h, f.source(), f.source_domain(), evens, odds));
  return Skeleton(f.source(), f.source_domain(), g.target(), g.target_domain(), std::move(components));
}

// ---------------------------------------------------------------------------

namespace {

/// Ordered compositions of `total` into parts first, first + 2, first + 4, ...
void compositions(unsigned total, unsigned first, std::vector<unsigned>& prefix,
                  std::vector<std::vector<unsigned>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = first; part <= total; part += 2) {
    prefix.push_back(part);
    compositions(total - part, first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<unsigned>> compositions(unsigned total, unsigned first) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  compositions(total, first, prefix, out);
  return out;
}

CoeffFn compose_coefficient(const CoeffFn& c, std::span<const CoeffFn> body_map, unsigned nvars,
                            std::vector<Polynomial>& excluded) {
  auto lift = [nvars](const Rational& r) { return CoeffFn::constant(nvars, r); };
  CoeffFn value = evaluate_in<CoeffFn>(c.numerator(), body_map, lift);
  if (c.is_polynomial()) return value;
  CoeffFn b = evaluate_in<CoeffFn>(c.denominator_base(), body_map, lift);
  if (b.is_zero()) throw DomainError("denominator vanishes identically along the body map");
  excluded.push_back(b.numerator());
  return value * b.inverse().pow(c.denominator_exponent());
}

class FormulaComposer {
 public:
  FormulaComposer(const Skeleton& g, const Skeleton& f) : f_(f) {
    for (unsigned i = 0; i < f.target().even_dim; ++i) body_map_.push_back(f.component(i).body());
    for (const auto& c : g.components()) tables_.emplace_back(c, std::vector<Rational>{});
  }

  SuperFunction component(unsigned index) {
    const SuperSpace& s = f_.source();
    SuperFunction result(s);
    for (MultiIndex::Mask mask = 0; mask < (MultiIndex::Mask{1} << s.odd_dim); ++mask) {
      std::vector<unsigned> labels = MultiIndex(mask).labels();
      result.add_term(MultiIndex(mask), coefficient(index, labels));
    }
    return result;
  }

  std::vector<Polynomial> excluded;

 private:
  CoeffFn coefficient(unsigned index, const std::vector<unsigned>& labels) {
    const unsigned n = static_cast<unsigned>(labels.size());
    const unsigned p = f_.source().even_dim;
    CoeffFn total(p);
    for (unsigned even_total = 0; even_total <= n; even_total += 2)
      for (const auto& alpha : compositions(even_total, 2))
        for (const auto& beta : compositions(n - even_total, 1)) {
          Rational weight = factorial(static_cast<unsigned>(alpha.size())) *
                            factorial(static_cast<unsigned>(beta.size()));
          for (unsigned a : alpha) weight *= factorial(a);
          for (unsigned b : beta) weight *= factorial(b);
          weight = 1 / weight;
          std::vector<unsigned> order(n);
          std::iota(order.begin(), order.end(), 0U);
          do {
            CoeffFn value = permuted_term(index, labels, order, alpha, beta);
            if (value.is_zero()) continue;
            total += (sorting_sign(order) > 0 ? weight : Rational(-weight)) * value;
          } while (std::next_permutation(order.begin(), order.end()));
        }
    return total;
  }

  /// d^m psi_k(phi_0)(phi_alpha blocks)(phi_beta blocks) on the permuted arguments.
  CoeffFn permuted_term(unsigned index, const std::vector<unsigned>& labels, const std::vector<unsigned>& order,
                        const std::vector<unsigned>& alpha, const std::vector<unsigned>& beta) {
    const unsigned p = f_.source().even_dim;
    const unsigned even_out = f_.target().even_dim;
    const unsigned odd_out = f_.target().odd_dim;
    std::vector<std::vector<CoeffFn>> even_blocks, odd_blocks;
    std::size_t pos = 0;
    auto next_block = [&](unsigned size) {
      std::vector<unsigned> block;
      for (unsigned i = 0; i < size; ++i) block.push_back(labels[order[pos++]]);
      return block;
    };
    for (unsigned a : alpha) {
      std::vector<unsigned> block = next_block(a);
      std::vector<CoeffFn> values;
      bool any = false;
      for (unsigned i = 0; i < even_out; ++i) {
        values.push_back(phi_k_eval(f_.component(i), block));
        any = any || !values.back().is_zero();
      }
      if (!any) return CoeffFn(p);
      even_blocks.push_back(std::move(values));
    }
    for (unsigned b : beta) {
      std::vector<unsigned> block = next_block(b);
      std::vector<CoeffFn> values;
      bool any = false;
      for (unsigned l = 0; l < odd_out; ++l) {
        values.push_back(phi_k_eval(f_.component(even_out + l), block));
        any = any || !values.back().is_zero();
      }
      if (!any) return CoeffFn(p);
      odd_blocks.push_back(std::move(values));
    }
    CoeffFn total(p);
    Exponents derivative(even_out, 0);
    std::vector<unsigned> odd_labels;
    walk(index, even_blocks, odd_blocks, 0, CoeffFn::constant(p, 1), derivative, odd_labels, total);
    return total;
  }

  void walk(unsigned index, const std::vector<std::vector<CoeffFn>>& even_blocks,
            const std::vector<std::vector<CoeffFn>>& odd_blocks, std::size_t depth, const CoeffFn& product,
            Exponents& derivative, std::vector<unsigned>& odd_labels, CoeffFn& total) {
    const std::size_t m = even_blocks.size();
    if (depth == m + odd_blocks.size()) {
      int sign = sorting_sign(odd_labels);
      if (sign == 0) return;
      MultiIndex::Mask mask = 0;
      for (unsigned l : odd_labels) mask |= MultiIndex::Mask{1} << (l - 1);
      const CoeffFn& d = composed_derivative(index, MultiIndex(mask), derivative);
      if (d.is_zero()) return;
      total += (sign > 0 ? d : -d) * product;
      return;
    }
    if (depth < m) {
      const auto& values = even_blocks[depth];
      for (unsigned i = 0; i < values.size(); ++i) {
        if (values[i].is_zero()) continue;
        ++derivative[i];
        walk(index, even_blocks, odd_blocks, depth + 1, product * values[i], derivative, odd_labels, total);
        --derivative[i];
      }
    } else {
      const auto& values = odd_blocks[depth - m];
      for (unsigned l = 0; l < values.size(); ++l) {
        if (values[l].is_zero()) continue;
        odd_labels.push_back(l + 1);
        walk(index, even_blocks, odd_blocks, depth + 1, product * values[l], derivative, odd_labels, total);
        odd_labels.pop_back();
      }
    }
  }

  const CoeffFn& composed_derivative(unsigned index, MultiIndex odd_index, const Exponents& alpha) {
    auto key = std::make_tuple(index, odd_index.mask(), alpha);
    if (auto it = composed_.find(key); it != composed_.end()) return it->second;
    const CoeffFn& symbolic = tables_[index].symbolic(odd_index, alpha);
    CoeffFn value = compose_coefficient(symbolic, body_map_, f_.source().even_dim, excluded);
    return composed_.emplace(std::move(key), std::move(value)).first->second;
  }

  const Skeleton& f_;
  std::vector<CoeffFn> body_map_;
  std::vector<DerivativeTable> tables_;
  std::map<std::tuple<unsigned, MultiIndex::Mask, Exponents>, CoeffFn> composed_;
};

}  // namespace

Skeleton compose_formula(const Skeleton& g, const Skeleton& f) {
  require_composable(g, f);
  FormulaComposer composer(g, f);
  std::vector<SuperFunction> components;
  for (unsigned i = 0; i < g.components().size(); ++i) components.push_back(composer.component(i));
  DeWittDomain domain = f.source_domain().excluding(composer.excluded);
  return Skeleton(f.source(), domain, g.target(), g.target_domain(), std::move(components));
}

CheckReport compare_skeletons(const Skeleton& a, const Skeleton& b, std::mt19937_64& rng, std::size_t samples) {
  CheckReport report;
  report.name = "skeleton comparison";
  if (a.source() != b.source() || a.target() != b.target()) {
    report.fail("skeletons act between different spaces");
    return report;
  }
  for (unsigned i = 0; i < a.components().size(); ++i)
    report.record(a.component(i) == b.component(i),
                  "component " + std::to_string(i + 1) + " differs symbolically");
  DeWittDomain domain = a.source_domain().intersect(b.source_domain());
  auto points = domain.sample(rng, samples);
  if (points.size() < samples) report.skip("fewer body points than requested could be sampled");
  for (const auto& point : points) {
    for (unsigned i = 0; i < a.components().size(); ++i) {
      std::set<MultiIndex> indices;
      for (const auto& [j, c] : a.component(i).terms()) indices.insert(j);
      for (const auto& [j, c] : b.component(i).terms()) indices.insert(j);
      for (MultiIndex j : indices) {
        try {
          report.record(a.component(i).coefficient(j).evaluate(point) == b.component(i).coefficient(j).evaluate(point),
                        "component " + std::to_string(i + 1) + " differs at a sampled body point");
        } catch (const DomainError&) {
          report.skip("a sampled body point hits a denominator zero");
        }
      }
    }
  }
  return report;
}

SuperFunction pullback(const Skeleton& f, const SuperFunction& h) {
  if (h.space() != f.target()) throw SpaceMismatch("superfunction does not live on the target of the morphism");
  auto evens = even_components(f);
  auto odds = odd_components(f);
  SuperFunction even = sf_substitute(h.even_part(), f.source(), f.source_domain(), evens, odds);
  SuperFunction odd = sf_substitute(h.odd_part(), f.source(), f.source_domain(), evens, odds);
  return even + odd;
}

LambdaPoint decode_point(SuperSpace space, unsigned rank, std::span<const GrassmannElement> images,
                         const DeWittDomain& domain) {
  if (images.size() != space.total()) throw SpaceMismatch("one image per coordinate is required");
  std::vector<GrassmannElement> even(images.begin(), images.begin() + space.even_dim);
  std::vector<GrassmannElement> odd(images.begin() + space.even_dim, images.end());
  LambdaPoint x(space, rank, std::move(even), std::move(odd));
  if (!contains(domain, x)) throw DomainError("decoded point lies outside the domain");
  return x;
}

GrassmannElement PointEvaluation::operator()(const SuperFunction& h) const { return evaluate_superfunction(h, x_); }

PointEvaluation encode_point(const DeWittDomain& domain, const LambdaPoint& x) {
  if (!contains(domain, x)) throw DomainError("point lies outside the domain");
  return PointEvaluation(x);
}

CheckReport check_algebra_morphism(SuperSpace space, const DeWittDomain& domain, unsigned rank,
                                   const MorphismTable& table) {
  CheckReport report;
  report.name = "algebra morphism";
  std::vector<GrassmannElement> images;
  for (unsigned i = 0; i < space.total(); ++i) {
    SuperFunction coordinate = i < space.even_dim ? SuperFunction::even_coordinate(space, i)
                                                  : SuperFunction::odd_coordinate(space, i - space.even_dim);
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& entry) { return entry.first == coordinate; });
    if (it == table.end()) throw Error("table has no entry for coordinate " + std::to_string(i + 1));
    images.push_back(it->second);
  }
  LambdaPoint x = decode_point(space, rank, images, domain);
  for (std::size_t e = 0; e < table.size(); ++e)
    report.record(evaluate_superfunction(table[e].first, x) == table[e].second,
                  "entry " + std::to_string(e + 1) + " disagrees with evaluation at the decoded point");
  return report;
}

}  // namespace superdom
