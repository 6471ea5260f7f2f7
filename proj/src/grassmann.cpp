#include <superdom/errors.hpp>
#include <superdom/grassmann.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace superdom {

MultiIndex MultiIndex::from_labels(std::span<const unsigned> labels) {
  Mask mask = 0;
  unsigned previous = 0;
  for (unsigned label : labels) {
    if (label <= previous || label > kMaxRank)
      throw std::invalid_argument("multi-index labels must be strictly increasing in 1.." +
                                  std::to_string(kMaxRank));
    mask |= Mask{1} << (label - 1);
    previous = label;
  }
  return MultiIndex(mask);
}

MultiIndex MultiIndex::single(unsigned label) {
  if (label == 0 || label > kMaxRank) throw std::invalid_argument("generator label out of range");
  return MultiIndex(Mask{1} << (label - 1));
}

unsigned MultiIndex::size() const { return static_cast<unsigned>(std::popcount(mask_)); }

unsigned MultiIndex::max_label() const { return static_cast<unsigned>(std::bit_width(mask_)); }

std::vector<unsigned> MultiIndex::labels() const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<unsigned>(std::countr_zero(m)) + 1);
  return out;
}

std::strong_ordering operator<=>(MultiIndex a, MultiIndex b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // Equal length: the sequence holding the smallest label not shared by both
  // comes first.
  MultiIndex::Mask lowest = (a.mask_ ^ b.mask_) & (~(a.mask_ ^ b.mask_) + 1);
  return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

int product_sign(MultiIndex a, MultiIndex b) {
  if (!a.disjoint(b)) return 0;
  unsigned inversions = 0;
  for (MultiIndex::Mask m = b.mask(); m != 0; m &= m - 1) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(m));
    inversions += static_cast<unsigned>(std::popcount(bit + 1 >= 64 ? 0 : a.mask() >> (bit + 1)));
  }
  return inversions % 2 ? -1 : 1;
}

int sorting_sign(std::span<const unsigned> values) {
  unsigned inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] == values[j]) return 0;
      if (values[i] > values[j]) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

// ---------------------------------------------------------------------------

GrassmannElement::GrassmannElement(unsigned rank) : rank_(rank) {
  if (rank > kMaxRank) throw RankCapExceeded("Grassmann rank " + std::to_string(rank) + " exceeds " +
                                             std::to_string(kMaxRank));
}

GrassmannElement GrassmannElement::scalar(unsigned rank, const Rational& value) {
  return monomial(rank, MultiIndex(), value);
}

GrassmannElement GrassmannElement::generator(unsigned rank, unsigned label) {
  return monomial(rank, MultiIndex::single(label), Rational(1));
}

GrassmannElement GrassmannElement::monomial(unsigned rank, MultiIndex index, const Rational& coefficient) {
  GrassmannElement e(rank);
  e.add_term(index, coefficient);
  return e;
}

Rational GrassmannElement::coefficient(MultiIndex index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool GrassmannElement::is_even() const {
  for (const auto& [index, c] : terms_)
    if (index.odd()) return false;
  return true;
}

bool GrassmannElement::is_odd() const {
  for (const auto& [index, c] : terms_)
    if (!index.odd()) return false;
  return true;
}

Parity GrassmannElement::parity() const {
  if (is_even()) return Parity::even;
  if (is_odd()) return Parity::odd;
  return Parity::mixed;
}

GrassmannElement GrassmannElement::soul() const {
  GrassmannElement s = *this;
  s.terms_.erase(MultiIndex());
  return s;
}

MultiIndex GrassmannElement::support() const {
  MultiIndex::Mask mask = 0;
  for (const auto& [index, c] : terms_) mask |= index.mask();
  return MultiIndex(mask);
}

GrassmannElement GrassmannElement::with_rank(unsigned rank) const {
  if (support().max_label() > rank)
    throw RankMismatch("element uses generators beyond rank " + std::to_string(rank));
  GrassmannElement e(rank);
  e.terms_ = terms_;
  return e;
}

void GrassmannElement::add_term(MultiIndex index, const Rational& coefficient) {
  if (index.max_label() > rank_)
    throw RankMismatch("generator label exceeds rank " + std::to_string(rank_));
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

static void require_same_rank(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.rank() != b.rank())
    throw RankMismatch("incompatible Grassmann algebras: rank " + std::to_string(a.rank()) + " vs " +
                       std::to_string(b.rank()));
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
  require_same_rank(*this, other);
  for (const auto& [index, c] : other.terms_) add_term(index, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& other) {
  require_same_rank(*this, other);
  for (const auto& [index, c] : other.terms_) add_term(index, -c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [index, c] : terms_) c *= factor;
  return *this;
}

GrassmannElement gadd(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement r = a;
  r += b;
  return r;
}

GrassmannElement gscale(const Rational& factor, const GrassmannElement& a) {
  GrassmannElement r = a;
  r *= factor;
  return r;
}

GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b) {
  require_same_rank(a, b);
  GrassmannElement r(a.rank());
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      int sign = product_sign(i, j);
      if (sign == 0) continue;
      Rational c = ci * cj;
      if (sign < 0) c = -c;
      r.add_term(i.united(j), c);
    }
  return r;
}

Rational gbody(const GrassmannElement& a) { return a.body(); }

GrassmannElement ginvert(const GrassmannElement& a) {
  Rational body = a.body();
  if (body == 0) throw NotInvertible("Grassmann element with zero body is not invertible");
  Rational inv = 1 / body;
  // a = body (1 + u) with u nilpotent; u^(rank+1) = 0.
  GrassmannElement u = gscale(inv, a.soul());
  GrassmannElement result = GrassmannElement::scalar(a.rank(), 1);
  GrassmannElement power = result;
  for (unsigned k = 1; k <= a.rank(); ++k) {
    power = gmul(power, u);
    if (power.is_zero()) break;
    if (k % 2)
      result -= power;
    else
      result += power;
  }
  result *= inv;
  return result;
}

GrassmannElement gpow(const GrassmannElement& a, unsigned exponent) {
  GrassmannElement result = GrassmannElement::scalar(a.rank(), 1);
  for (unsigned k = 0; k < exponent; ++k) {
    result = gmul(result, a);
    if (result.is_zero()) break;
  }
  return result;
}

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) { return gadd(a, b); }
GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement r = a;
  r -= b;
  return r;
}
GrassmannElement operator-(const GrassmannElement& a) { return gscale(Rational(-1), a); }
GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) { return gmul(a, b); }
GrassmannElement operator*(const Rational& factor, const GrassmannElement& a) { return gscale(factor, a); }

// ---------------------------------------------------------------------------

GrassmannMorphism::GrassmannMorphism(unsigned source_rank, unsigned target_rank,
                                     std::vector<GrassmannElement> images)
    : source_rank_(source_rank), target_rank_(target_rank), images_(std::move(images)) {
  if (images_.size() != source_rank_)
    throw RankMismatch("morphism needs one image per source generator");
  for (const auto& image : images_) {
    if (image.rank() != target_rank_) throw RankMismatch("morphism image has wrong rank");
    if (!image.is_odd()) throw ParityError("morphism images must be odd");
  }
}

GrassmannMorphism GrassmannMorphism::identity(unsigned rank) { return inclusion(rank, rank); }

GrassmannMorphism GrassmannMorphism::counit(unsigned rank) {
  return GrassmannMorphism(rank, 0, std::vector<GrassmannElement>(rank, GrassmannElement(0)));
}

GrassmannMorphism GrassmannMorphism::inclusion(unsigned source_rank, unsigned target_rank) {
  if (target_rank < source_rank) throw RankMismatch("inclusion needs target rank >= source rank");
  std::vector<GrassmannElement> images;
  for (unsigned i = 1; i <= source_rank; ++i) images.push_back(GrassmannElement::generator(target_rank, i));
  return GrassmannMorphism(source_rank, target_rank, std::move(images));
}

GrassmannMorphism GrassmannMorphism::truncation(unsigned source_rank, unsigned target_rank) {
  if (target_rank > source_rank) throw RankMismatch("truncation needs target rank <= source rank");
  std::vector<GrassmannElement> images;
  for (unsigned i = 1; i <= source_rank; ++i)
    images.push_back(i <= target_rank ? GrassmannElement::generator(target_rank, i)
                                      : GrassmannElement(target_rank));
  return GrassmannMorphism(source_rank, target_rank, std::move(images));
}

GrassmannMorphism GrassmannMorphism::permutation(std::span<const unsigned> perm) {
  auto rank = static_cast<unsigned>(perm.size());
  std::vector<bool> seen(rank + 1, false);
  std::vector<GrassmannElement> images;
  for (unsigned target : perm) {
    if (target == 0 || target > rank || seen[target]) throw std::invalid_argument("not a permutation");
    seen[target] = true;
    images.push_back(GrassmannElement::generator(rank, target));
  }
  return GrassmannMorphism(rank, rank, std::move(images));
}

GrassmannMorphism GrassmannMorphism::scaling(unsigned rank, unsigned label, const Rational& factor) {
  auto m = identity(rank);
  m.images_.at(label - 1) = GrassmannElement::monomial(rank, MultiIndex::single(label), factor);
  return m;
}

GrassmannMorphism GrassmannMorphism::kill(unsigned rank, unsigned label) {
  auto m = identity(rank);
  m.images_.at(label - 1) = GrassmannElement(rank);
  return m;
}

GrassmannElement gapply(const GrassmannMorphism& m, const GrassmannElement& a) {
  if (a.rank() != m.source_rank())
    throw RankMismatch("morphism source rank " + std::to_string(m.source_rank()) + " vs element rank " +
                       std::to_string(a.rank()));
  GrassmannElement result(m.target_rank());
  for (const auto& [index, c] : a.terms()) {
    GrassmannElement product = GrassmannElement::scalar(m.target_rank(), c);
    for (unsigned label : index.labels()) {
      product = gmul(product, m.images()[label - 1]);
      if (product.is_zero()) break;
    }
    result += product;
  }
  return result;
}

GrassmannMorphism compose(const GrassmannMorphism& second, const GrassmannMorphism& first) {
  if (first.target_rank() != second.source_rank()) throw RankMismatch("morphisms are not composable");
  std::vector<GrassmannElement> images;
  for (const auto& image : first.images()) images.push_back(gapply(second, image));
  return GrassmannMorphism(first.source_rank(), second.target_rank(), std::move(images));
}

}  // namespace superdom
