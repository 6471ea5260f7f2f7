#include <superdom/random.hpp>

#include <algorithm>
#include <numeric>

namespace superdom {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, long max_numerator, long max_denominator) {
  return make_rational(uniform(rng, -max_numerator, max_numerator), uniform(rng, 1, max_denominator));
}

Rational random_nonzero_rational(Rng& rng, long max_numerator, long max_denominator) {
  long n = uniform(rng, 1, max_numerator);
  if (uniform(rng, 0, 1)) n = -n;
  return make_rational(n, uniform(rng, 1, max_denominator));
}

std::optional<MultiIndex> random_index(Rng& rng, unsigned rank, Parity parity, unsigned max_size, unsigned min_size) {
  std::vector<unsigned> sizes;
  for (unsigned k = min_size; k <= std::min(rank, max_size); ++k) {
    if (parity == Parity::even && k % 2) continue;
    if (parity == Parity::odd && k % 2 == 0) continue;
    sizes.push_back(k);
  }
  if (sizes.empty()) return std::nullopt;
  unsigned size = sizes[uniform(rng, 0, static_cast<long>(sizes.size()) - 1)];
  std::vector<unsigned> labels(rank);
  std::iota(labels.begin(), labels.end(), 1U);
  std::shuffle(labels.begin(), labels.end(), rng);
  labels.resize(size);
  std::sort(labels.begin(), labels.end());
  return MultiIndex::from_labels(labels);
}

GrassmannElement random_grassmann(Rng& rng, unsigned rank, Parity parity, unsigned max_terms, bool with_body) {
  GrassmannElement a(rank);
  unsigned terms = static_cast<unsigned>(uniform(rng, 1, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    auto index = random_index(rng, rank, parity, 4, with_body ? 0 : 1);
    if (!index) continue;
    a.add_term(*index, random_nonzero_rational(rng));
  }
  return a;
}

GrassmannMorphism random_morphism(Rng& rng, unsigned source_rank, unsigned target_rank) {
  std::vector<GrassmannElement> images;
  for (unsigned i = 0; i < source_rank; ++i) {
    if (uniform(rng, 0, 4) == 0)
      images.emplace_back(target_rank);
    else
      images.push_back(random_grassmann(rng, target_rank, Parity::odd, 3));
  }
  return GrassmannMorphism(source_rank, target_rank, std::move(images));
}

namespace {

LambdaPoint soul_point(Rng& rng, SuperSpace space, unsigned rank, unsigned max_terms) {
  std::vector<GrassmannElement> even, odd;
  for (unsigned i = 0; i < space.even_dim; ++i)
    even.push_back(uniform(rng, 0, 3) == 0 ? GrassmannElement(rank)
                                            : random_grassmann(rng, rank, Parity::even, max_terms, false));
  for (unsigned j = 0; j < space.odd_dim; ++j)
    odd.push_back(uniform(rng, 0, 4) == 0 ? GrassmannElement(rank)
                                           : random_grassmann(rng, rank, Parity::odd, max_terms, false));
  return LambdaPoint(space, rank, std::move(even), std::move(odd));
}

}  // namespace

std::optional<LambdaPoint> random_point(Rng& rng, const DeWittDomain& domain, unsigned rank, unsigned max_terms) {
  auto bodies = domain.sample(rng, 1);
  if (bodies.empty()) return std::nullopt;
  return LambdaPoint::from_body(domain.space(), rank, bodies.front()) +
         soul_point(rng, domain.space(), rank, max_terms);
}

LambdaPoint random_soul_point(Rng& rng, SuperSpace space, unsigned rank, unsigned max_terms) {
  return soul_point(rng, space, rank, max_terms);
}

LambdaPoint random_supported_point(Rng& rng, SuperSpace space, unsigned rank, unsigned label, unsigned max_terms) {
  GrassmannElement theta = GrassmannElement::generator(rank, label);
  std::vector<GrassmannElement> even, odd;
  for (unsigned i = 0; i < space.even_dim; ++i)
    even.push_back(theta * random_grassmann(rng, rank, Parity::odd, max_terms));
  for (unsigned j = 0; j < space.odd_dim; ++j)
    odd.push_back(theta * random_grassmann(rng, rank, Parity::even, max_terms));
  return LambdaPoint(space, rank, std::move(even), std::move(odd));
}

LambdaPoint random_vector_point(Rng& rng, SuperSpace space, unsigned rank, unsigned max_terms) {
  std::vector<Rational> body;
  for (unsigned i = 0; i < space.even_dim; ++i) body.push_back(random_rational(rng));
  return LambdaPoint::from_body(space, rank, body) + soul_point(rng, space, rank, max_terms);
}

Polynomial random_polynomial(Rng& rng, unsigned nvars, unsigned max_degree, unsigned max_terms) {
  Polynomial p(nvars);
  unsigned terms = static_cast<unsigned>(uniform(rng, 1, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    unsigned degree = static_cast<unsigned>(uniform(rng, 0, max_degree));
    for (unsigned d = 0; d < degree && nvars > 0; ++d) ++e[uniform(rng, 0, nvars - 1)];
    p.add_term(e, random_nonzero_rational(rng));
  }
  return p;
}

SuperFunction random_superfunction(Rng& rng, SuperSpace space, Parity parity, unsigned max_degree,
                                   unsigned max_terms) {
  SuperFunction f(space);
  unsigned terms = static_cast<unsigned>(uniform(rng, 1, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    auto index = random_index(rng, space.odd_dim, parity, space.odd_dim);
    if (!index) continue;
    f.add_term(*index, CoeffFn(random_polynomial(rng, space.even_dim, max_degree)));
  }
  return f;
}

SuperFunction random_rational_superfunction(Rng& rng, SuperSpace space, Parity parity, unsigned max_degree,
                                            unsigned max_terms) {
  SuperFunction f = random_superfunction(rng, space, parity, max_degree, max_terms);
  if (space.even_dim == 0) return f;
  const unsigned p = space.even_dim;
  DeWittDomain domain(space);
  SuperFunction out(space);
  for (const auto& [j, c] : f.terms()) {
    unsigned i = static_cast<unsigned>(uniform(rng, 0, p - 1));
    Polynomial x = Polynomial::variable(p, i);
    Polynomial den(p);
    switch (uniform(rng, 0, 3)) {
      case 0:
        den = Polynomial::constant(p, 1) + x * x;
        break;
      case 1:
        den = x;
        break;
      case 2:
        den = x + Polynomial::constant(p, 2);
        break;
      default:
        out.add_term(j, c);
        continue;
    }
    domain = domain.excluding(den);
    out.add_term(j, c * CoeffFn::quotient(Polynomial::constant(p, 1), den));
  }
  return out.with_domain(domain);
}

Skeleton random_skeleton(Rng& rng, SuperSpace source, SuperSpace target, unsigned max_degree, bool rational,
                         unsigned max_terms) {
  std::vector<SuperFunction> components;
  DeWittDomain domain(source);
  for (unsigned i = 0; i < target.total(); ++i) {
    Parity parity = i < target.even_dim ? Parity::even : Parity::odd;
    SuperFunction c = rational ? random_rational_superfunction(rng, source, parity, max_degree, max_terms)
                               : random_superfunction(rng, source, parity, max_degree, max_terms);
    domain = domain.excluding(c.domain().excluded());
    components.push_back(std::move(c));
  }
  return Skeleton(source, domain, target, DeWittDomain(target), std::move(components));
}

SuperSpace random_space(Rng& rng, unsigned max_even, unsigned max_odd) {
  return SuperSpace{static_cast<unsigned>(uniform(rng, 0, max_even)), static_cast<unsigned>(uniform(rng, 0, max_odd))};
}

}  // namespace superdom
