#pragma once

#include <superdom/coefffn.hpp>
#include <superdom/grassmann.hpp>
#include <superdom/report.hpp>
#include <superdom/superspace.hpp>

#include <map>
#include <random>
#include <span>
#include <vector>

namespace superdom {

/// Scalar superfunction sum_J c_J(x) xi_J on a domain of R^{p|q}. Odd
/// multi-indices only use labels 1..q, so |J| <= q by construction.
class SuperFunction {
 public:
  using Terms = std::map<MultiIndex, CoeffFn>;

  SuperFunction() = default;
  /// Zero function on the whole space.
  explicit SuperFunction(SuperSpace space);
  SuperFunction(SuperSpace space, DeWittDomain domain);

  static SuperFunction constant(SuperSpace space, const Rational& value);
  /// x_{index+1}.
  static SuperFunction even_coordinate(SuperSpace space, unsigned index);
  /// xi_{index+1}.
  static SuperFunction odd_coordinate(SuperSpace space, unsigned index);
  static SuperFunction term(SuperSpace space, MultiIndex odd_index, CoeffFn coefficient);

  const SuperSpace& space() const { return space_; }
  const DeWittDomain& domain() const { return domain_; }
  const Terms& terms() const { return terms_; }
  CoeffFn coefficient(MultiIndex odd_index) const;
  /// The J = {} coefficient.
  CoeffFn body() const { return coefficient(MultiIndex()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  /// Zero counts as both even and odd.
  bool is_even() const;
  bool is_odd() const;
  Parity parity() const;
  SuperFunction even_part() const;
  SuperFunction odd_part() const;

  void add_term(MultiIndex odd_index, const CoeffFn& coefficient);
  SuperFunction with_domain(DeWittDomain domain) const;
  /// Intersects the domain with `domain`.
  SuperFunction restricted(const DeWittDomain& domain) const;

  /// Ignores the domain.
  friend bool operator==(const SuperFunction& a, const SuperFunction& b);

 private:
  SuperSpace space_;
  DeWittDomain domain_;
  Terms terms_;
};

SuperFunction sf_add(const SuperFunction& f, const SuperFunction& g);
SuperFunction sf_sub(const SuperFunction& f, const SuperFunction& g);
SuperFunction sf_scale(const Rational& factor, const SuperFunction& f);
SuperFunction sf_scale(const CoeffFn& factor, const SuperFunction& f);

/// Product by multiplying xi-monomials with the Grassmann sign law.
SuperFunction sf_mul_monomial(const SuperFunction& f, const SuperFunction& g);
/// Product by the shuffle sum over the alternating coefficient maps.
SuperFunction sf_mul_shuffle(const SuperFunction& f, const SuperFunction& g);

/// Inverse of an even superfunction whose body coefficient is not
/// identically zero; the body's numerator is added to the excluded zeros.
/// Throws ParityError or NotInvertible.
SuperFunction sf_invert(const SuperFunction& f);
/// Like sf_invert but for any parity; used for division in expressions.
SuperFunction sf_inverse(const SuperFunction& f);

SuperFunction sf_power(const SuperFunction& f, unsigned exponent);

/// d/dx_{index+1}, termwise.
SuperFunction sf_partial(const SuperFunction& f, unsigned index);
/// Right derivative in xi_{label}: xi_J = s xi_{J - label} xi_label maps to s xi_{J - label}.
SuperFunction sf_odd_partial(const SuperFunction& f, unsigned label);

/// phi_k(e_{l_1}, ..., e_{l_k}): 0 on repeated labels, otherwise the sorting
/// sign times the coefficient of the ascending index. Throws on label 0 or > q.
CoeffFn phi_k_eval(const SuperFunction& f, std::span<const unsigned> labels);

SuperFunction operator+(const SuperFunction& a, const SuperFunction& b);
SuperFunction operator-(const SuperFunction& a, const SuperFunction& b);
SuperFunction operator-(const SuperFunction& a);
SuperFunction operator*(const SuperFunction& a, const SuperFunction& b);
SuperFunction operator*(const Rational& factor, const SuperFunction& a);

/// A morphism of superdomains: one superfunction per target coordinate,
/// even components first.
class Skeleton {
 public:
  Skeleton() = default;
  /// Throws SpaceMismatch / ParityError on malformed data.
  Skeleton(SuperSpace source, DeWittDomain source_domain, SuperSpace target, DeWittDomain target_domain,
           std::vector<SuperFunction> components);

  const SuperSpace& source() const { return source_; }
  const SuperSpace& target() const { return target_; }
  const DeWittDomain& source_domain() const { return source_domain_; }
  const DeWittDomain& target_domain() const { return target_domain_; }
  const std::vector<SuperFunction>& components() const { return components_; }
  const SuperFunction& component(unsigned i) const { return components_.at(i); }
  bool is_polynomial() const;

  Skeleton with_source_domain(DeWittDomain domain) const;
  Skeleton with_target_domain(DeWittDomain domain) const;

  /// Component equality (domains ignored).
  friend bool operator==(const Skeleton& a, const Skeleton& b);

 private:
  SuperSpace source_;
  SuperSpace target_;
  DeWittDomain source_domain_;
  DeWittDomain target_domain_;
  std::vector<SuperFunction> components_;
};

Skeleton skeleton_identity(SuperSpace space, const DeWittDomain& domain);

/// Spot-checks the declarations a skeleton makes about its domains: every
/// denominator is nonzero and the body map lands in the target domain, at
/// sampled body points of the source domain.
CheckReport validate_skeleton(const Skeleton& f, std::mt19937_64& rng, std::size_t samples = 25);

/// Body values of the J = {} coefficients of the even components.
std::vector<Rational> body_map(const Skeleton& f, std::span<const Rational> body);

}  // namespace superdom
