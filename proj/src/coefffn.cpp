#include <superdom/coefffn.hpp>
#include <superdom/errors.hpp>

#include <numeric>

namespace superdom {

CoeffFn::CoeffFn(unsigned nvars) : num_(nvars), base_(Polynomial::constant(nvars, 1)) {}

CoeffFn::CoeffFn(Polynomial numerator)
    : num_(std::move(numerator)), base_(Polynomial::constant(num_.nvars(), 1)) {}

CoeffFn::CoeffFn(Polynomial num, Polynomial base, unsigned exp)
    : num_(std::move(num)), base_(std::move(base)), exp_(exp) {
  if (num_.nvars() != base_.nvars()) throw SpaceMismatch("numerator and denominator in different variables");
  normalize();
}

CoeffFn CoeffFn::quotient(Polynomial numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw NotInvertible("denominator is identically zero");
  return CoeffFn(std::move(numerator), denominator, 1);
}

CoeffFn CoeffFn::constant(unsigned nvars, const Rational& value) {
  return CoeffFn(Polynomial::constant(nvars, value));
}

CoeffFn CoeffFn::variable(unsigned nvars, unsigned index) { return CoeffFn(Polynomial::variable(nvars, index)); }

void CoeffFn::normalize() {
  const unsigned n = num_.nvars();
  if (num_.is_zero() || exp_ == 0) {
    base_ = Polynomial::constant(n, 1);
    exp_ = 0;
    return;
  }
  Rational lead = base_.leading().second;
  Rational scale = 1;
  for (unsigned i = 0; i < exp_; ++i) scale *= lead;
  num_ *= Rational(1 / scale);
  base_ *= Rational(1 / lead);
  if (base_.is_constant()) {
    base_ = Polynomial::constant(n, 1);
    exp_ = 0;
    return;
  }
  if (base_.terms().size() == 1) {
    Exponents den = base_.leading().first;
    for (auto& e : den) e *= exp_;
    Exponents content = num_.monomial_content();
    for (unsigned i = 0; i < n; ++i) content[i] = std::min(content[i], den[i]);
    num_ = num_.divide_monomial(content);
    unsigned g = 0;
    for (unsigned i = 0; i < n; ++i) {
      den[i] -= content[i];
      g = std::gcd(g, den[i]);
    }
    if (g == 0) {
      base_ = Polynomial::constant(n, 1);
      exp_ = 0;
      return;
    }
    for (auto& e : den) e /= g;
    base_ = Polynomial::monomial(den, 1);
    exp_ = g;
    return;
  }
  while (exp_ > 0) {
    auto q = num_.divide_exact(base_);
    if (!q) break;
    num_ = std::move(*q);
    --exp_;
  }
  if (exp_ == 0) base_ = Polynomial::constant(n, 1);
}

Polynomial CoeffFn::denominator() const { return base_.pow(exp_); }

const Polynomial& CoeffFn::as_polynomial() const {
  if (!is_polynomial()) throw Error("coefficient is a rational function, not a polynomial");
  return num_;
}

CoeffFn& CoeffFn::operator+=(const CoeffFn& other) {
  if (other.nvars() != nvars()) throw SpaceMismatch("coefficient functions in different variables");
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (exp_ == 0 && other.exp_ == 0) {
    num_ += other.num_;
    return *this;
  }
  if (exp_ == 0 || other.exp_ == 0 || base_ == other.base_) {
    const Polynomial& base = exp_ == 0 ? other.base_ : base_;
    unsigned e = std::max(exp_, other.exp_);
    Polynomial num = num_ * base.pow(e - exp_) + other.num_ * base.pow(e - other.exp_);
    *this = CoeffFn(std::move(num), base, e);
    return *this;
  }
  Polynomial da = denominator();
  Polynomial db = other.denominator();
  *this = CoeffFn(num_ * db + other.num_ * da, da * db, 1);
  return *this;
}

CoeffFn& CoeffFn::operator-=(const CoeffFn& other) { return *this += -other; }

CoeffFn& CoeffFn::operator*=(const CoeffFn& other) {
  if (other.nvars() != nvars()) throw SpaceMismatch("coefficient functions in different variables");
  if (other.exp_ == 0) {
    *this = CoeffFn(num_ * other.num_, base_, exp_);
  } else if (exp_ == 0 || base_ == other.base_) {
    *this = CoeffFn(num_ * other.num_, other.base_, exp_ + other.exp_);
  } else {
    *this = CoeffFn(num_ * other.num_, denominator() * other.denominator(), 1);
  }
  return *this;
}

CoeffFn& CoeffFn::operator*=(const Rational& factor) {
  num_ *= factor;
  if (num_.is_zero()) normalize();
  return *this;
}

CoeffFn CoeffFn::inverse() const {
  if (is_zero()) throw NotInvertible("coefficient function is identically zero");
  return CoeffFn(denominator(), num_, 1);
}

CoeffFn CoeffFn::pow(unsigned exponent) const {
  if (exponent == 0) return constant(nvars(), 1);
  return CoeffFn(num_.pow(exponent), base_, exp_ * exponent);
}

CoeffFn CoeffFn::partial(unsigned var) const {
  if (exp_ == 0) return CoeffFn(num_.partial(var));
  Polynomial num = num_.partial(var) * base_ - Rational(exp_) * num_ * base_.partial(var);
  return CoeffFn(std::move(num), base_, exp_ + 1);
}

CoeffFn CoeffFn::remapped(unsigned new_nvars, std::span<const unsigned> var_map) const {
  return CoeffFn(num_.remapped(new_nvars, var_map), base_.remapped(new_nvars, var_map), exp_);
}

Rational CoeffFn::evaluate(std::span<const Rational> point) const {
  Rational b = 1;
  if (exp_ > 0) {
    b = base_.evaluate(point);
    if (b == 0) throw DomainError("denominator vanishes at the evaluation point");
  }
  Rational d = 1;
  for (unsigned i = 0; i < exp_; ++i) d *= b;
  return num_.evaluate(point) / d;
}

bool operator==(const CoeffFn& a, const CoeffFn& b) {
  if (a.nvars() != b.nvars()) return false;
  if (a.exp_ == b.exp_ && a.base_ == b.base_) return a.num_ == b.num_;
  return a.num_ * b.denominator() == b.num_ * a.denominator();
}

CoeffFn operator+(const CoeffFn& a, const CoeffFn& b) {
  CoeffFn r = a;
  r += b;
  return r;
}

CoeffFn operator-(const CoeffFn& a, const CoeffFn& b) {
  CoeffFn r = a;
  r -= b;
  return r;
}

CoeffFn operator-(const CoeffFn& a) { return Rational(-1) * a; }

CoeffFn operator*(const CoeffFn& a, const CoeffFn& b) {
  CoeffFn r = a;
  r *= b;
  return r;
}

CoeffFn operator*(const Rational& factor, const CoeffFn& a) {
  CoeffFn r = a;
  r *= factor;
  return r;
}

}  // namespace superdom
