#include <superdom/errors.hpp>
#include <superdom/multilinear.hpp>

namespace superdom {

DerivativeTable::DerivativeTable(const SuperFunction& f, std::vector<Rational> body)
    : f_(&f), body_(std::move(body)) {}

const CoeffFn& DerivativeTable::symbolic(MultiIndex odd_index, const Exponents& alpha) {
  auto key = std::make_pair(odd_index.mask(), alpha);
  if (auto it = symbolic_.find(key); it != symbolic_.end()) return it->second;
  CoeffFn c(f_->space().even_dim);
  unsigned i = 0;
  while (i < alpha.size() && alpha[i] == 0) ++i;
  if (i == alpha.size()) {
    c = f_->coefficient(odd_index);
  } else {
    Exponents lower = alpha;
    --lower[i];
    c = symbolic(odd_index, lower).partial(i);
  }
  return symbolic_.emplace(std::move(key), std::move(c)).first->second;
}

Rational DerivativeTable::value(MultiIndex odd_index, const Exponents& alpha) {
  if (!f_->terms().contains(odd_index)) return 0;
  auto key = std::make_pair(odd_index.mask(), alpha);
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  Rational v = symbolic(odd_index, alpha).evaluate(body_);
  values_.emplace(std::move(key), v);
  return v;
}

Rational DerivativeTable::basis_value(std::span<const unsigned> directions) {
  const unsigned p = f_->space().even_dim;
  Exponents alpha(p, 0);
  std::vector<unsigned> odd;
  MultiIndex::Mask mask = 0;
  for (unsigned b : directions) {
    if (b < p) {
      ++alpha[b];
    } else {
      odd.push_back(b - p + 1);
      mask |= MultiIndex::Mask{1} << (b - p);
    }
  }
  int sign = sorting_sign(odd);
  if (sign == 0) return 0;
  Rational v = value(MultiIndex(mask), alpha);
  return sign > 0 ? v : Rational(-v);
}

// ---------------------------------------------------------------------------

namespace {

struct FormWalk {
  DerivativeTable& table;
  std::span<const SuperVector* const> args;
  unsigned p;
  unsigned total;
  Exponents alpha;
  std::vector<unsigned> odd;
  MultiIndex::Mask odd_mask = 0;
  GrassmannElement result;

  void run(std::size_t depth, const GrassmannElement& product) {
    if (depth == args.size()) {
      int sign = sorting_sign(odd);
      Rational v = table.value(MultiIndex(odd_mask), alpha);
      if (v == 0) return;
      result += (sign > 0 ? v : Rational(-v)) * product;
      return;
    }
    const SuperVector& arg = *args[depth];
    for (unsigned b = 0; b < total; ++b) {
      const GrassmannElement& coordinate = arg[b];
      if (coordinate.is_zero()) continue;
      MultiIndex::Mask bit = 0;
      if (b >= p) {
        bit = MultiIndex::Mask{1} << (b - p);
        if (odd_mask & bit) continue;
      }
      GrassmannElement next = product * coordinate;
      if (next.is_zero()) continue;
      if (b < p) {
        ++alpha[b];
      } else {
        odd.push_back(b - p + 1);
        odd_mask |= bit;
      }
      run(depth + 1, next);
      if (b < p) {
        --alpha[b];
      } else {
        odd.pop_back();
        odd_mask &= ~bit;
      }
    }
  }
};

}  // namespace

Jet::Jet(const Skeleton& f, std::vector<Rational> body) : f_(&f), body_(std::move(body)) {
  if (body_.size() != f.source().even_dim) throw SpaceMismatch("body point has wrong dimension");
  if (!f.source_domain().contains_body(body_)) throw DomainError("body point is outside the source domain");
  for (const auto& c : f.components()) tables_.emplace_back(c, body_);
}

GrassmannElement Jet::apply_component(unsigned component, std::span<const SuperVector* const> args, unsigned rank) {
  const SuperSpace& s = f_->source();
  for (const SuperVector* a : args) {
    if (a->size() != s.total()) throw SpaceMismatch("multilinear argument has wrong dimension");
    for (const auto& c : *a)
      if (c.rank() != rank) throw RankMismatch("multilinear argument has wrong rank");
  }
  FormWalk walk{tables_.at(component), args, s.even_dim, s.total(), Exponents(s.even_dim, 0), {}, 0,
                GrassmannElement(rank)};
  walk.run(0, GrassmannElement::scalar(rank, 1));
  return walk.result;
}

SuperVector Jet::apply(std::span<const SuperVector* const> args, unsigned rank) {
  SuperVector out;
  for (unsigned i = 0; i < f_->components().size(); ++i) out.push_back(apply_component(i, args, rank));
  return out;
}

}  // namespace superdom
