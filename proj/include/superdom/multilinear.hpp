#pragma once

#include <superdom/superfn.hpp>

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace superdom {

/// Values at a fixed body point of all partial derivatives d^alpha c_J of
/// the coefficients of one superfunction, computed symbolically on demand
/// and memoized.
class DerivativeTable {
 public:
  DerivativeTable(const SuperFunction& f, std::vector<Rational> body);

  /// d^alpha c_J at the body point; alpha is a multiset of even directions
  /// given as an exponent vector.
  Rational value(MultiIndex odd_index, const Exponents& alpha);
  const CoeffFn& symbolic(MultiIndex odd_index, const Exponents& alpha);

  /// Basis value F^(r)(x_R)(e_{b_1}, ..., e_{b_r}). Directions 0..p-1 are
  /// even, p..p+q-1 are the odd basis vectors e_1..e_q.
  Rational basis_value(std::span<const unsigned> directions);

 private:
  const SuperFunction* f_;
  std::vector<Rational> body_;
  std::map<std::pair<MultiIndex::Mask, Exponents>, CoeffFn> symbolic_;
  std::map<std::pair<MultiIndex::Mask, Exponents>, Rational> values_;
};

/// The symmetric multilinear forms F^(r)(x_R) of a skeleton at a body point,
/// one per target coordinate.
///
/// Arguments may carry Grassmann coefficients; they are extracted to the
/// right in argument order with no extra sign:
/// F(v_1, ..., v_r) = sum_b F(e_{b_1}, ..., e_{b_r}) v_1[b_1] ... v_r[b_r].
class Jet {
 public:
  Jet(const Skeleton& f, std::vector<Rational> body);

  const Skeleton& skeleton() const { return *f_; }
  const std::vector<Rational>& body() const { return body_; }

  /// Every argument has p+q Grassmann coordinates of rank `rank`.
  SuperVector apply(std::span<const SuperVector* const> args, unsigned rank);
  GrassmannElement apply_component(unsigned component, std::span<const SuperVector* const> args, unsigned rank);

 private:
  const Skeleton* f_;
  std::vector<Rational> body_;
  std::vector<DerivativeTable> tables_;
};

}  // namespace superdom
