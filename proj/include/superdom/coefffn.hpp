#pragma once

#include <superdom/polynomial.hpp>

namespace superdom {

/// Rational function num / base^exponent in the even coordinates.
///
/// The denominator is kept as a power of a single polynomial so that the
/// quotient rule does not square denominators. Normal form: base is monic
/// (leading coefficient 1), a constant base is folded into the numerator, and
/// factors of base dividing the numerator are cancelled. Equality is decided
/// by cross-multiplication and does not depend on the normal form.
class CoeffFn {
 public:
  explicit CoeffFn(unsigned nvars = 0);
  explicit CoeffFn(Polynomial numerator);

  /// Throws NotInvertible when the denominator is the zero polynomial.
  static CoeffFn quotient(Polynomial numerator, const Polynomial& denominator);
  static CoeffFn constant(unsigned nvars, const Rational& value);
  static CoeffFn variable(unsigned nvars, unsigned index);

  unsigned nvars() const { return num_.nvars(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator_base() const { return base_; }
  unsigned denominator_exponent() const { return exp_; }
  /// base^exponent expanded.
  Polynomial denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return exp_ == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  /// Throws Error unless is_polynomial().
  const Polynomial& as_polynomial() const;

  CoeffFn& operator+=(const CoeffFn& other);
  CoeffFn& operator-=(const CoeffFn& other);
  CoeffFn& operator*=(const CoeffFn& other);
  CoeffFn& operator*=(const Rational& factor);

  /// Throws NotInvertible on the zero function.
  CoeffFn inverse() const;
  CoeffFn pow(unsigned exponent) const;
  CoeffFn partial(unsigned var) const;
  CoeffFn remapped(unsigned new_nvars, std::span<const unsigned> var_map) const;

  /// Throws DomainError when the denominator vanishes at `point`.
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const CoeffFn& a, const CoeffFn& b);

 private:
  CoeffFn(Polynomial num, Polynomial base, unsigned exp);
  void normalize();

  Polynomial num_;
  Polynomial base_;
  unsigned exp_ = 0;
};

CoeffFn operator+(const CoeffFn& a, const CoeffFn& b);
CoeffFn operator-(const CoeffFn& a, const CoeffFn& b);
CoeffFn operator-(const CoeffFn& a);
CoeffFn operator*(const CoeffFn& a, const CoeffFn& b);
CoeffFn operator*(const Rational& factor, const CoeffFn& a);

}  // namespace superdom
