#include <superdom/errors.hpp>
#include <superdom/polynomial.hpp>

#include <algorithm>
#include <numeric>

namespace superdom {

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0U);
  unsigned db = std::accumulate(b.begin(), b.end(), 0U);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(unsigned nvars) : nvars_(nvars) {}

Polynomial Polynomial::constant(unsigned nvars, const Rational& value) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), value);
  return p;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  Polynomial p(nvars);
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(Exponents exponents, const Rational& coefficient) {
  Polynomial p(static_cast<unsigned>(exponents.size()));
  p.add_term(exponents, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0U));
}

unsigned Polynomial::degree_in(unsigned var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (exponents.size() != nvars_) throw SpaceMismatch("monomial has wrong number of variables");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

static void require_same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw SpaceMismatch("polynomials in different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

Polynomial Polynomial::partial(unsigned var) const {
  Polynomial d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    --f[var];
    d.add_term(f, c * e[var]);
  }
  return d;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  require_same_vars(*this, divisor);
  if (divisor.is_zero()) return std::nullopt;
  Polynomial remainder = *this;
  Polynomial quotient(nvars_);
  const auto& [lead_e, lead_c] = divisor.leading();
  while (!remainder.is_zero()) {
    const auto& [re, rc] = remainder.leading();
    Exponents q(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      q[i] = re[i] - lead_e[i];
    }
    Polynomial step = monomial(q, rc / lead_c);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::optional<Polynomial> Polynomial::divide_by_variable(unsigned var) const {
  Polynomial q(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) return std::nullopt;
    Exponents f = e;
    --f[var];
    q.add_term(f, c);
  }
  return q;
}

Exponents Polynomial::monomial_content() const {
  if (terms_.empty()) return Exponents(nvars_, 0);
  Exponents content = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (unsigned i = 0; i < nvars_; ++i) content[i] = std::min(content[i], e[i]);
  return content;
}

Polynomial Polynomial::divide_monomial(const Exponents& monomial) const {
  Polynomial q(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (unsigned i = 0; i < nvars_; ++i) f[i] -= monomial[i];
    q.add_term(f, c);
  }
  return q;
}

Polynomial Polynomial::remapped(unsigned new_nvars, std::span<const unsigned> var_map) const {
  if (var_map.size() != nvars_) throw SpaceMismatch("variable map has wrong size");
  Polynomial out(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_nvars, 0);
    for (unsigned i = 0; i < nvars_; ++i) f.at(var_map[i]) += e[i];
    out.add_term(f, c);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw SpaceMismatch("evaluation point has wrong dimension");
  return evaluate_in<Rational>(*this, point, [](const Rational& r) { return r; });
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r += b;
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r -= b;
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  r *= Rational(-1);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a, b);
  Polynomial r(a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (unsigned i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial operator*(const Rational& factor, const Polynomial& a) {
  Polynomial r = a;
  r *= factor;
  return r;
}

}  // namespace superdom
