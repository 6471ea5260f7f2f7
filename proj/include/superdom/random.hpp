#pragma once

#include <superdom/superfn.hpp>

#include <random>

namespace superdom {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long max_numerator = 5, long max_denominator = 3);
Rational random_nonzero_rational(Rng& rng, long max_numerator = 5, long max_denominator = 3);

/// Random multi-index of the given parity (any length for Parity::mixed)
/// with at most `max_size` labels from 1..rank; nullopt when none fits.
std::optional<MultiIndex> random_index(Rng& rng, unsigned rank, Parity parity, unsigned max_size = 4,
                                       unsigned min_size = 0);

/// Up to max_terms random terms of the given parity. with_body = false
/// suppresses the empty index.
GrassmannElement random_grassmann(Rng& rng, unsigned rank, Parity parity, unsigned max_terms = 4,
                                  bool with_body = true);

/// Odd images, so the result is a valid morphism lambda^source -> lambda^target.
GrassmannMorphism random_morphism(Rng& rng, unsigned source_rank, unsigned target_rank);

/// Body drawn from the domain (nullopt when sampling fails), random souls.
std::optional<LambdaPoint> random_point(Rng& rng, const DeWittDomain& domain, unsigned rank, unsigned max_terms = 3);
/// Zero-body even point.
LambdaPoint random_soul_point(Rng& rng, SuperSpace space, unsigned rank, unsigned max_terms = 3);
/// Even point each of whose terms contains theta_label.
LambdaPoint random_supported_point(Rng& rng, SuperSpace space, unsigned rank, unsigned label, unsigned max_terms = 2);
/// Even point with an arbitrary rational body.
LambdaPoint random_vector_point(Rng& rng, SuperSpace space, unsigned rank, unsigned max_terms = 3);

Polynomial random_polynomial(Rng& rng, unsigned nvars, unsigned max_degree, unsigned max_terms = 3);

/// Polynomial coefficients of degree <= max_degree.
SuperFunction random_superfunction(Rng& rng, SuperSpace space, Parity parity, unsigned max_degree,
                                   unsigned max_terms = 3);
/// Same, with some coefficients divided by a denominator whose zero set is
/// excluded from the domain.
SuperFunction random_rational_superfunction(Rng& rng, SuperSpace space, Parity parity, unsigned max_degree,
                                            unsigned max_terms = 3);

Skeleton random_skeleton(Rng& rng, SuperSpace source, SuperSpace target, unsigned max_degree, bool rational = false,
                         unsigned max_terms = 3);

SuperSpace random_space(Rng& rng, unsigned max_even, unsigned max_odd);

}  // namespace superdom
