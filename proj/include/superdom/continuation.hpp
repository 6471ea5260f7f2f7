#pragma once

#include <superdom/report.hpp>
#include <superdom/superfn.hpp>

#include <random>
#include <span>
#include <vector>

namespace superdom {

/// h evaluated at a lambda-point by substituting the Grassmann coordinate
/// values; denominators are inverted in lambda^N. Throws DomainError when a
/// denominator has zero body at x.
GrassmannElement evaluate_superfunction(const SuperFunction& h, const LambdaPoint& x);

/// f_lambda(x) by direct substitution. Throws DomainError outside the source domain.
LambdaPoint eval_subst(const Skeleton& f, const LambdaPoint& x);

/// f_lambda(x) by the double Taylor sum over even-soul insertions (m) and
/// odd insertions (k), weighted 1/(m! k!), truncated at m + k <= N.
LambdaPoint eval_taylor(const Skeleton& f, const LambdaPoint& x);

struct TaylorTerm {
  unsigned m = 0;
  unsigned k = 0;
  SuperVector value;
};

/// Individual (m, k) contributions of the Taylor sum for m + k <= max_order.
std::vector<TaylorTerm> taylor_terms(const Skeleton& f, const LambdaPoint& x, unsigned max_order);

/// f^(k)(x)(v_1, ..., v_k) at a lambda-point x = x_R + n, assembled as
/// sum_m 1/m! F^(m+k)(x_R)(n, ..., n, v_1, ..., v_k). k = 0 gives f(x).
SuperVector family_fk(const Skeleton& f, const LambdaPoint& x, std::span<const SuperVector> args);

/// Default naturality battery at rank N: counit, permutations, scalings,
/// killing a generator, odd cubic substitutions, inclusion and truncation.
std::vector<GrassmannMorphism> default_morphisms(unsigned rank);

/// eval(f, phi(x)) = phi(eval(f, x)) by both evaluation routes. Samples that
/// leave the domain under a morphism are skipped and reported.
CheckReport check_naturality(const Skeleton& f, std::span<const GrassmannMorphism> morphisms,
                             std::span<const LambdaPoint> samples);

/// Labels p such that every term of every coordinate contains theta_p
/// (as a bit mask; all bits set for the zero vector).
MultiIndex::Mask common_generators(const SuperVector& v);

/// sum over nonempty I of f^(|I|)(x)(y_{i_1}, ..., y_{i_|I|}) for increments
/// each supported on a single generator; equals f(x + sum y) - f(x).
/// Throws Error when an increment is not supported on a single generator.
LambdaPoint taylor_increment(const Skeleton& f, const LambdaPoint& x, std::span<const LambdaPoint> increments);

}  // namespace superdom
