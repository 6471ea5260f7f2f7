#pragma once

#include <superdom/rational.hpp>

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace superdom {

using Exponents = std::vector<unsigned>;

/// Graded order, larger total degree first, ties broken lexicographically
/// (larger exponent of x_1 first). Iteration order is print order.
struct GradedOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Exponents, Rational, GradedOrder>;

  explicit Polynomial(unsigned nvars = 0);

  static Polynomial constant(unsigned nvars, const Rational& value);
  /// The coordinate x_{index+1}; index is 0-based.
  static Polynomial variable(unsigned nvars, unsigned index);
  static Polynomial monomial(Exponents exponents, const Rational& coefficient);

  unsigned nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 if absent).
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(unsigned var) const;
  /// First term in GradedOrder. Precondition: nonzero.
  const std::pair<const Exponents, Rational>& leading() const { return *terms_.begin(); }

  void add_term(const Exponents& exponents, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& factor);

  Polynomial partial(unsigned var) const;
  Polynomial pow(unsigned exponent) const;

  /// Exact quotient when `divisor` divides this polynomial, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  /// Divides by x_var; nullopt unless every term contains x_var.
  std::optional<Polynomial> divide_by_variable(unsigned var) const;
  /// Monomial of largest degree dividing every term.
  Exponents monomial_content() const;
  Polynomial divide_monomial(const Exponents& monomial) const;

  /// Re-expresses in `new_nvars` variables, old variable i becoming new variable var_map[i].
  Polynomial remapped(unsigned new_nvars, std::span<const unsigned> var_map) const;

  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  unsigned nvars_;
  Terms terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& factor, const Polynomial& a);

/// Evaluates p with variable i set to values[i], in any commutative context
/// (rationals, polynomials, even Grassmann elements, even superfunctions).
/// `lift` maps a Rational into T.
template <class T, class Lift>
T evaluate_in(const Polynomial& p, std::span<const T> values, Lift lift) {
  std::vector<std::vector<T>> powers(p.nvars());
  auto power = [&](unsigned var, unsigned e) -> const T& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(lift(Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * values[var]);
    return cache[e];
  };
  T result = lift(Rational(0));
  for (const auto& [exps, coefficient] : p.terms()) {
    T term = lift(coefficient);
    for (unsigned var = 0; var < exps.size(); ++var)
      if (exps[var] != 0) term = term * power(var, exps[var]);
    result = result + term;
  }
  return result;
}

}  // namespace superdom
