#pragma once

#include <superdom/grassmann.hpp>
#include <superdom/polynomial.hpp>

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace superdom {

/// The coordinate superspace R^{p|q}: even coordinates x_1..x_p, odd
/// coordinates xi_1..xi_q.
struct SuperSpace {
  unsigned even_dim = 0;
  unsigned odd_dim = 0;

  unsigned total() const { return even_dim + odd_dim; }
  std::string to_string() const;
  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;
};

/// Open interval; a missing bound means unbounded on that side.
struct Interval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  bool contains(const Rational& value) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Box {
  std::vector<Interval> sides;

  /// All of Q^dimension.
  static Box whole(unsigned dimension);
  bool contains(std::span<const Rational> point) const;
  /// nullopt when empty.
  std::optional<Box> intersect(const Box& other) const;
  friend bool operator==(const Box&, const Box&) = default;
};

/// A DeWitt-open set, stored through its body: a finite union of open boxes
/// with the zero sets of finitely many polynomials removed.
class DeWittDomain {
 public:
  DeWittDomain() = default;
  /// The whole superspace.
  explicit DeWittDomain(SuperSpace space);
  DeWittDomain(SuperSpace space, std::vector<Box> boxes, std::vector<Polynomial> excluded = {});

  const SuperSpace& space() const { return space_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<Polynomial>& excluded() const { return excluded_; }
  bool is_whole() const;

  bool contains_body(std::span<const Rational> body) const;

  /// Removes the zero set of `p`. Ignored when p is a nonzero constant or a
  /// product of powers of polynomials already excluded.
  DeWittDomain excluding(const Polynomial& p) const;
  DeWittDomain excluding(std::span<const Polynomial> polys) const;
  DeWittDomain intersect(const DeWittDomain& other) const;
  DeWittDomain with_space(SuperSpace space) const;

  /// Random rational body points inside the domain; fewer than `count` when
  /// rejection sampling keeps failing.
  std::vector<std::vector<Rational>> sample(std::mt19937_64& rng, std::size_t count) const;

  friend bool operator==(const DeWittDomain&, const DeWittDomain&) = default;

 private:
  SuperSpace space_;
  std::vector<Box> boxes_;
  std::vector<Polynomial> excluded_;
};

/// An element of E(E tensor lambda)(not necessarily even): one Grassmann
/// coefficient per basis vector, even basis first.
using SuperVector = std::vector<GrassmannElement>;

/// A lambda-point x in E(lambda) = (E tensor lambda)_0.
class LambdaPoint {
 public:
  LambdaPoint() = default;
  /// Throws ParityError / RankMismatch when the coordinates do not describe an even element.
  LambdaPoint(SuperSpace space, unsigned rank, std::vector<GrassmannElement> even_values,
              std::vector<GrassmannElement> odd_values);

  static LambdaPoint zero(SuperSpace space, unsigned rank);
  static LambdaPoint from_body(SuperSpace space, unsigned rank, std::span<const Rational> body);
  static LambdaPoint from_vector(SuperSpace space, const SuperVector& v);

  const SuperSpace& space() const { return space_; }
  unsigned rank() const { return rank_; }
  const std::vector<GrassmannElement>& even_values() const { return even_; }
  const std::vector<GrassmannElement>& odd_values() const { return odd_; }
  /// Coordinate i over all p+q coordinates, even first.
  const GrassmannElement& coordinate(unsigned i) const;

  std::vector<Rational> body() const;
  SuperVector as_vector() const;
  LambdaPoint with_rank(unsigned rank) const;

  LambdaPoint& operator+=(const LambdaPoint& other);
  friend LambdaPoint operator+(const LambdaPoint& a, const LambdaPoint& b);
  friend LambdaPoint operator-(const LambdaPoint& a, const LambdaPoint& b);
  friend bool operator==(const LambdaPoint&, const LambdaPoint&) = default;

 private:
  SuperSpace space_;
  unsigned rank_ = 0;
  std::vector<GrassmannElement> even_;
  std::vector<GrassmannElement> odd_;
};

/// Body / soul decomposition x = eta(x_R) + n_0 + n_1.
struct PointSplit {
  std::vector<Rational> body;
  std::vector<GrassmannElement> even_soul;
  std::vector<GrassmannElement> odd_part;
};

PointSplit split(const LambdaPoint& x);
LambdaPoint reassemble(SuperSpace space, unsigned rank, const PointSplit& parts);

/// Membership depends on the body only. Throws SpaceMismatch.
bool contains(const DeWittDomain& domain, const LambdaPoint& x);

/// E(phi): applies the morphism to every coordinate.
LambdaPoint point_map(const GrassmannMorphism& m, const LambdaPoint& x);

SuperVector vector_map(const GrassmannMorphism& m, const SuperVector& v);

}  // namespace superdom
