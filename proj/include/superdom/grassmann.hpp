#pragma once

#include <superdom/rational.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace superdom {

/// Largest supported Grassmann rank. Multi-indices are stored as bit masks.
inline constexpr unsigned kMaxRank = 63;

/// A strictly increasing label sequence I = (i_1 < ... < i_k), denoting the
/// ordered product theta_{i_1} ... theta_{i_k}. The empty index is 1.
class MultiIndex {
 public:
  using Mask = std::uint64_t;

  constexpr MultiIndex() = default;
  constexpr explicit MultiIndex(Mask mask) : mask_(mask) {}

  /// Throws std::invalid_argument unless labels are strictly increasing and in 1..kMaxRank.
  static MultiIndex from_labels(std::span<const unsigned> labels);
  static MultiIndex single(unsigned label);

  constexpr Mask mask() const { return mask_; }
  unsigned size() const;
  bool empty() const { return mask_ == 0; }
  bool odd() const { return size() % 2 == 1; }
  bool contains(unsigned label) const { return (mask_ >> (label - 1)) & 1U; }
  /// 0 for the empty index.
  unsigned max_label() const;
  std::vector<unsigned> labels() const;

  bool disjoint(MultiIndex other) const { return (mask_ & other.mask_) == 0; }
  MultiIndex united(MultiIndex other) const { return MultiIndex(mask_ | other.mask_); }
  MultiIndex without(MultiIndex other) const { return MultiIndex(mask_ & ~other.mask_); }

  friend constexpr bool operator==(MultiIndex, MultiIndex) = default;
  /// Orders by length first, then lexicographically by label sequence.
  friend std::strong_ordering operator<=>(MultiIndex a, MultiIndex b);

 private:
  Mask mask_ = 0;
};

/// Sign s with theta_I theta_J = s theta_{I u J}; 0 when I and J overlap.
int product_sign(MultiIndex a, MultiIndex b);

/// Sign of the permutation sorting a sequence of distinct values; 0 on repeats.
int sorting_sign(std::span<const unsigned> values);

enum class Parity { even, odd, mixed };

/// Element of lambda^N = Q[theta_1, ..., theta_N]. Sparse, no stored zeros,
/// terms ordered by (|I|, lex I).
class GrassmannElement {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  explicit GrassmannElement(unsigned rank = 0);

  static GrassmannElement scalar(unsigned rank, const Rational& value);
  static GrassmannElement generator(unsigned rank, unsigned label);
  static GrassmannElement monomial(unsigned rank, MultiIndex index, const Rational& coefficient);

  unsigned rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(MultiIndex index) const;
  bool is_zero() const { return terms_.empty(); }

  /// Zero counts as both even and odd.
  bool is_even() const;
  bool is_odd() const;
  Parity parity() const;

  Rational body() const { return coefficient(MultiIndex()); }
  GrassmannElement soul() const;
  /// Labels of generators that actually occur.
  MultiIndex support() const;

  /// Same element viewed in lambda^rank (rank >= every occurring label).
  GrassmannElement with_rank(unsigned rank) const;

  void add_term(MultiIndex index, const Rational& coefficient);

  GrassmannElement& operator+=(const GrassmannElement& other);
  GrassmannElement& operator-=(const GrassmannElement& other);
  GrassmannElement& operator*=(const Rational& factor);

  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

 private:
  unsigned rank_;
  Terms terms_;
};

GrassmannElement gadd(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement gscale(const Rational& factor, const GrassmannElement& a);
GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b);
/// The counit epsilon: coefficient of the empty index.
Rational gbody(const GrassmannElement& a);
/// Throws NotInvertible when the body vanishes.
GrassmannElement ginvert(const GrassmannElement& a);
GrassmannElement gpow(const GrassmannElement& a, unsigned exponent);

GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement operator-(const GrassmannElement& a);
GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement operator*(const Rational& factor, const GrassmannElement& a);

/// Even unital algebra morphism lambda^N -> lambda^M, fixed by the (odd)
/// images of the generators.
class GrassmannMorphism {
 public:
  /// Throws RankMismatch on wrong image count or rank, ParityError on a non-odd image.
  GrassmannMorphism(unsigned source_rank, unsigned target_rank, std::vector<GrassmannElement> images);

  static GrassmannMorphism identity(unsigned rank);
  /// epsilon: lambda^N -> lambda^0 = Q.
  static GrassmannMorphism counit(unsigned rank);
  /// eta_mu: lambda^N -> lambda^M, theta_i -> theta_i (M >= N).
  static GrassmannMorphism inclusion(unsigned source_rank, unsigned target_rank);
  /// epsilon_mu: lambda^N -> lambda^M killing theta_i for i > M (M <= N).
  static GrassmannMorphism truncation(unsigned source_rank, unsigned target_rank);
  /// theta_i -> theta_{perm[i-1]}; perm is a permutation of 1..N.
  static GrassmannMorphism permutation(std::span<const unsigned> perm);
  static GrassmannMorphism scaling(unsigned rank, unsigned label, const Rational& factor);
  static GrassmannMorphism kill(unsigned rank, unsigned label);

  unsigned source_rank() const { return source_rank_; }
  unsigned target_rank() const { return target_rank_; }
  const std::vector<GrassmannElement>& images() const { return images_; }

  friend bool operator==(const GrassmannMorphism&, const GrassmannMorphism&) = default;

 private:
  unsigned source_rank_;
  unsigned target_rank_;
  std::vector<GrassmannElement> images_;
};

GrassmannElement gapply(const GrassmannMorphism& m, const GrassmannElement& a);
/// second o first.
GrassmannMorphism compose(const GrassmannMorphism& second, const GrassmannMorphism& first);

}  // namespace superdom
