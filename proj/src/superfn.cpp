#include <superdom/errors.hpp>
#include <superdom/superfn.hpp>

#include <bit>

namespace superdom {

namespace {

DeWittDomain merge_domains(const DeWittDomain& a, const DeWittDomain& b) {
  if (a == b) return a;
  if (a.is_whole() && a.space() == b.space()) return b;
  if (b.is_whole() && a.space() == b.space()) return a;
  return a.intersect(b);
}

void require_same_space(const SuperFunction& f, const SuperFunction& g) {
  if (f.space() != g.space())
    throw SpaceMismatch("superfunctions on R^" + f.space().to_string() + " and R^" + g.space().to_string());
}

}  // namespace

SuperFunction::SuperFunction(SuperSpace space) : space_(space), domain_(space) {}

SuperFunction::SuperFunction(SuperSpace space, DeWittDomain domain) : space_(space), domain_(std::move(domain)) {
  if (domain_.space().even_dim != space_.even_dim) throw SpaceMismatch("domain does not match superfunction space");
  domain_ = domain_.with_space(space_);
}

SuperFunction SuperFunction::constant(SuperSpace space, const Rational& value) {
  SuperFunction f(space);
  f.add_term(MultiIndex(), CoeffFn::constant(space.even_dim, value));
  return f;
}

SuperFunction SuperFunction::even_coordinate(SuperSpace space, unsigned index) {
  if (index >= space.even_dim) throw SpaceMismatch("even coordinate index out of range");
  SuperFunction f(space);
  f.add_term(MultiIndex(), CoeffFn::variable(space.even_dim, index));
  return f;
}

SuperFunction SuperFunction::odd_coordinate(SuperSpace space, unsigned index) {
  if (index >= space.odd_dim) throw SpaceMismatch("odd coordinate index out of range");
  SuperFunction f(space);
  f.add_term(MultiIndex::single(index + 1), CoeffFn::constant(space.even_dim, 1));
  return f;
}

SuperFunction SuperFunction::term(SuperSpace space, MultiIndex odd_index, CoeffFn coefficient) {
  SuperFunction f(space);
  f.add_term(odd_index, coefficient);
  return f;
}

CoeffFn SuperFunction::coefficient(MultiIndex odd_index) const {
  auto it = terms_.find(odd_index);
  return it == terms_.end() ? CoeffFn(space_.even_dim) : it->second;
}

bool SuperFunction::is_polynomial() const {
  for (const auto& [j, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

bool SuperFunction::is_even() const {
  for (const auto& [j, c] : terms_)
    if (j.odd()) return false;
  return true;
}

bool SuperFunction::is_odd() const {
  for (const auto& [j, c] : terms_)
    if (!j.odd()) return false;
  return true;
}

Parity SuperFunction::parity() const {
  if (is_even()) return Parity::even;
  if (is_odd()) return Parity::odd;
  return Parity::mixed;
}

SuperFunction SuperFunction::even_part() const {
  SuperFunction f(space_, domain_);
  for (const auto& [j, c] : terms_)
    if (!j.odd()) f.terms_.emplace(j, c);
  return f;
}

SuperFunction SuperFunction::odd_part() const {
  SuperFunction f(space_, domain_);
  for (const auto& [j, c] : terms_)
    if (j.odd()) f.terms_.emplace(j, c);
  return f;
}

void SuperFunction::add_term(MultiIndex odd_index, const CoeffFn& coefficient) {
  if (odd_index.max_label() > space_.odd_dim)
    throw SpaceMismatch("odd index exceeds the odd dimension of R^" + space_.to_string());
  if (coefficient.nvars() != space_.even_dim) throw SpaceMismatch("coefficient has wrong number of variables");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(odd_index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperFunction SuperFunction::with_domain(DeWittDomain domain) const {
  SuperFunction f(space_, std::move(domain));
  f.terms_ = terms_;
  return f;
}

SuperFunction SuperFunction::restricted(const DeWittDomain& domain) const {
  return with_domain(merge_domains(domain_, domain.with_space(space_)));
}

bool operator==(const SuperFunction& a, const SuperFunction& b) {
  if (a.space_ != b.space_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

// ---------------------------------------------------------------------------

SuperFunction sf_add(const SuperFunction& f, const SuperFunction& g) {
  require_same_space(f, g);
  SuperFunction r = f.with_domain(merge_domains(f.domain(), g.domain()));
  for (const auto& [j, c] : g.terms()) r.add_term(j, c);
  return r;
}

SuperFunction sf_sub(const SuperFunction& f, const SuperFunction& g) { return sf_add(f, sf_scale(Rational(-1), g)); }

SuperFunction sf_scale(const Rational& factor, const SuperFunction& f) {
  SuperFunction r(f.space(), f.domain());
  if (factor == 0) return r;
  for (const auto& [j, c] : f.terms()) r.add_term(j, factor * c);
  return r;
}

SuperFunction sf_scale(const CoeffFn& factor, const SuperFunction& f) {
  SuperFunction r(f.space(), f.domain());
  for (const auto& [j, c] : f.terms()) r.add_term(j, factor * c);
  return r;
}

SuperFunction sf_mul_monomial(const SuperFunction& f, const SuperFunction& g) {
  require_same_space(f, g);
  SuperFunction r(f.space(), merge_domains(f.domain(), g.domain()));
  for (const auto& [i, a] : f.terms())
    for (const auto& [j, b] : g.terms()) {
      int sign = product_sign(i, j);
      if (sign == 0) continue;
      CoeffFn c = a * b;
      if (sign < 0) c = -c;
      r.add_term(i.united(j), c);
    }
  return r;
}

SuperFunction sf_mul_shuffle(const SuperFunction& f, const SuperFunction& g) {
  require_same_space(f, g);
  const unsigned q = f.space().odd_dim;
  const unsigned p = f.space().even_dim;
  SuperFunction r(f.space(), merge_domains(f.domain(), g.domain()));
  std::vector<unsigned> first, second, positions;
  for (MultiIndex::Mask mask = 0; mask < (MultiIndex::Mask{1} << q); ++mask) {
    const std::vector<unsigned> labels = MultiIndex(mask).labels();
    const unsigned m = static_cast<unsigned>(labels.size());
    CoeffFn total(p);
    // A (k, m-k) shuffle is fixed by the set of positions sent to the first block.
    for (unsigned chosen = 0; chosen < (1U << m); ++chosen) {
      first.clear();
      second.clear();
      positions.clear();
      for (unsigned pos = 0; pos < m; ++pos)
        if ((chosen >> pos) & 1U) {
          first.push_back(labels[pos]);
          positions.push_back(pos);
        }
      for (unsigned pos = 0; pos < m; ++pos)
        if (!((chosen >> pos) & 1U)) {
          second.push_back(labels[pos]);
          positions.push_back(pos);
        }
      CoeffFn a = phi_k_eval(f, first);
      if (a.is_zero()) continue;
      CoeffFn b = phi_k_eval(g, second);
      if (b.is_zero()) continue;
      CoeffFn term = a * b;
      if (sorting_sign(positions) < 0) term = -term;
      total += term;
    }
    r.add_term(MultiIndex(mask), total);
  }
  return r;
}

SuperFunction sf_inverse(const SuperFunction& f) {
  CoeffFn body = f.body();
  if (body.is_zero()) throw NotInvertible("body coefficient is identically zero");
  CoeffFn inv_body = body.inverse();
  DeWittDomain domain = f.domain().excluding(body.numerator());
  SuperFunction unit = SuperFunction::constant(f.space(), 1).with_domain(domain);
  // f = body (1 + n) with n nilpotent; 1/f = (1/body) sum (-n)^k.
  SuperFunction minus_n(f.space(), domain);
  for (const auto& [j, c] : f.terms())
    if (!j.empty()) minus_n.add_term(j, -(inv_body * c));
  SuperFunction sum = unit;
  SuperFunction power = unit;
  while (true) {
    power = sf_mul_monomial(power, minus_n);
    if (power.is_zero()) break;
    sum = sf_add(sum, power);
  }
  return sf_scale(inv_body, sum).with_domain(domain);
}

SuperFunction sf_invert(const SuperFunction& f) {
  if (!f.is_even()) throw ParityError("only even superfunctions are inverted");
  return sf_inverse(f);
}

SuperFunction sf_power(const SuperFunction& f, unsigned exponent) {
  SuperFunction result = SuperFunction::constant(f.space(), 1).with_domain(f.domain());
  for (unsigned i = 0; i < exponent; ++i) result = sf_mul_monomial(result, f);
  return result;
}

SuperFunction sf_partial(const SuperFunction& f, unsigned index) {
  if (index >= f.space().even_dim) throw SpaceMismatch("even coordinate index out of range");
  SuperFunction r(f.space(), f.domain());
  for (const auto& [j, c] : f.terms()) r.add_term(j, c.partial(index));
  return r;
}

SuperFunction sf_odd_partial(const SuperFunction& f, unsigned label) {
  if (label == 0 || label > f.space().odd_dim) throw SpaceMismatch("odd coordinate label out of range");
  SuperFunction r(f.space(), f.domain());
  for (const auto& [j, c] : f.terms()) {
    if (!j.contains(label)) continue;
    unsigned after = static_cast<unsigned>(std::popcount(j.mask() >> label));
    r.add_term(j.without(MultiIndex::single(label)), after % 2 ? -c : c);
  }
  return r;
}

CoeffFn phi_k_eval(const SuperFunction& f, std::span<const unsigned> labels) {
  MultiIndex::Mask mask = 0;
  for (unsigned l : labels) {
    if (l == 0 || l > f.space().odd_dim) throw SpaceMismatch("odd basis label out of range");
    mask |= MultiIndex::Mask{1} << (l - 1);
  }
  int sign = sorting_sign(labels);
  if (sign == 0) return CoeffFn(f.space().even_dim);
  CoeffFn c = f.coefficient(MultiIndex(mask));
  return sign > 0 ? c : -c;
}

SuperFunction operator+(const SuperFunction& a, const SuperFunction& b) { return sf_add(a, b); }
SuperFunction operator-(const SuperFunction& a, const SuperFunction& b) { return sf_sub(a, b); }
SuperFunction operator-(const SuperFunction& a) { return sf_scale(Rational(-1), a); }
SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) { return sf_mul_monomial(a, b); }
SuperFunction operator*(const Rational& factor, const SuperFunction& a) { return sf_scale(factor, a); }

// ---------------------------------------------------------------------------

Skeleton::Skeleton(SuperSpace source, DeWittDomain source_domain, SuperSpace target, DeWittDomain target_domain,
                   std::vector<SuperFunction> components)
    : source_(source),
      target_(target),
      source_domain_(source_domain.with_space(source)),
      target_domain_(target_domain.with_space(target)),
      components_(std::move(components)) {
  if (components_.size() != target_.total())
    throw SpaceMismatch("skeleton into R^" + target_.to_string() + " needs " + std::to_string(target_.total()) +
                        " components");
  for (unsigned i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    if (c.space() != source_) throw SpaceMismatch("skeleton component lives on the wrong space");
    if (i < target_.even_dim && !c.is_even())
      throw ParityError("component y" + std::to_string(i + 1) + " must be even");
    if (i >= target_.even_dim && !c.is_odd())
      throw ParityError("component h" + std::to_string(i + 1 - target_.even_dim) + " must be odd");
    source_domain_ = source_domain_.excluding(c.domain().excluded());
  }
  for (auto& c : components_) c = c.with_domain(source_domain_);
}

bool Skeleton::is_polynomial() const {
  for (const auto& c : components_)
    if (!c.is_polynomial()) return false;
  return true;
}

Skeleton Skeleton::with_source_domain(DeWittDomain domain) const {
  return Skeleton(source_, std::move(domain), target_, target_domain_, components_);
}

Skeleton Skeleton::with_target_domain(DeWittDomain domain) const {
  return Skeleton(source_, source_domain_, target_, std::move(domain), components_);
}

bool operator==(const Skeleton& a, const Skeleton& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
}

Skeleton skeleton_identity(SuperSpace space, const DeWittDomain& domain) {
  std::vector<SuperFunction> components;
  for (unsigned i = 0; i < space.even_dim; ++i) components.push_back(SuperFunction::even_coordinate(space, i));
  for (unsigned j = 0; j < space.odd_dim; ++j) components.push_back(SuperFunction::odd_coordinate(space, j));
  return Skeleton(space, domain, space, domain, std::move(components));
}

std::vector<Rational> body_map(const Skeleton& f, std::span<const Rational> body) {
  std::vector<Rational> image;
  for (unsigned i = 0; i < f.target().even_dim; ++i) image.push_back(f.component(i).body().evaluate(body));
  return image;
}

CheckReport validate_skeleton(const Skeleton& f, std::mt19937_64& rng, std::size_t samples) {
  CheckReport report;
  report.name = "skeleton declarations";
  auto points = f.source_domain().sample(rng, samples);
  if (points.empty()) report.skip("no body points could be sampled from the source domain");
  for (const auto& point : points) {
    try {
      for (const auto& c : f.components())
        for (const auto& [j, coeff] : c.terms()) coeff.evaluate(point);
      report.record(f.target_domain().contains_body(body_map(f, point)),
                    "body map leaves the target domain at a sampled point");
    } catch (const DomainError& e) {
      report.fail(std::string("denominator vanishes at a sampled point: ") + e.what());
    }
  }
  return report;
}

}  // namespace superdom
