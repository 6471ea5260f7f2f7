#include <superdom/errors.hpp>
#include <superdom/superspace.hpp>

#include <algorithm>

namespace superdom {

std::string SuperSpace::to_string() const {
  return std::to_string(even_dim) + "|" + std::to_string(odd_dim);
}

bool Interval::contains(const Rational& value) const {
  if (lower && !(*lower < value)) return false;
  if (upper && !(value < *upper)) return false;
  return true;
}

Box Box::whole(unsigned dimension) { return Box{std::vector<Interval>(dimension)}; }

bool Box::contains(std::span<const Rational> point) const {
  if (point.size() != sides.size()) throw SpaceMismatch("box and point have different dimensions");
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (!sides[i].contains(point[i])) return false;
  return true;
}

std::optional<Box> Box::intersect(const Box& other) const {
  if (other.sides.size() != sides.size()) throw SpaceMismatch("boxes of different dimensions");
  Box out;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    Interval s;
    const auto& a = sides[i];
    const auto& b = other.sides[i];
    if (a.lower && b.lower)
      s.lower = std::max(*a.lower, *b.lower);
    else
      s.lower = a.lower ? a.lower : b.lower;
    if (a.upper && b.upper)
      s.upper = std::min(*a.upper, *b.upper);
    else
      s.upper = a.upper ? a.upper : b.upper;
    if (s.lower && s.upper && !(*s.lower < *s.upper)) return std::nullopt;
    out.sides.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------

DeWittDomain::DeWittDomain(SuperSpace space) : space_(space), boxes_{Box::whole(space.even_dim)} {}

DeWittDomain::DeWittDomain(SuperSpace space, std::vector<Box> boxes, std::vector<Polynomial> excluded)
    : space_(space), boxes_(std::move(boxes)), excluded_() {
  for (const auto& b : boxes_)
    if (b.sides.size() != space_.even_dim) throw SpaceMismatch("box dimension differs from even dimension");
  for (const auto& p : excluded) *this = excluding(p);
}

bool DeWittDomain::is_whole() const {
  if (!excluded_.empty()) return false;
  return std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b == Box::whole(space_.even_dim); });
}

bool DeWittDomain::contains_body(std::span<const Rational> body) const {
  if (body.size() != space_.even_dim) throw SpaceMismatch("body point has wrong dimension");
  bool in_box = std::any_of(boxes_.begin(), boxes_.end(), [&](const Box& b) { return b.contains(body); });
  if (!in_box) return false;
  for (const auto& p : excluded_)
    if (p.evaluate(body) == 0) return false;
  return true;
}

DeWittDomain DeWittDomain::excluding(const Polynomial& p) const {
  if (p.nvars() != space_.even_dim) throw SpaceMismatch("excluded polynomial has wrong number of variables");
  DeWittDomain d = *this;
  if (p.is_constant() && !p.is_zero()) return d;
  if (p.is_zero()) {
    if (std::find(d.excluded_.begin(), d.excluded_.end(), p) == d.excluded_.end()) d.excluded_.push_back(p);
    return d;
  }
  // Products of powers of excluded polynomials (up to scale) remove nothing new.
  Polynomial rest = p;
  bool reduced = true;
  while (!rest.is_constant() && reduced) {
    reduced = false;
    for (const auto& q : d.excluded_)
      if (!q.is_zero() && !q.is_constant())
        if (auto quotient = rest.divide_exact(q)) {
          rest = std::move(*quotient);
          reduced = true;
        }
  }
  if (!rest.is_constant()) d.excluded_.push_back(p);
  return d;
}

DeWittDomain DeWittDomain::excluding(std::span<const Polynomial> polys) const {
  DeWittDomain d = *this;
  for (const auto& p : polys) d = d.excluding(p);
  return d;
}

DeWittDomain DeWittDomain::intersect(const DeWittDomain& other) const {
  if (other.space_.even_dim != space_.even_dim) throw SpaceMismatch("domains of different dimensions");
  std::vector<Box> boxes;
  for (const auto& a : boxes_)
    for (const auto& b : other.boxes_)
      if (auto c = a.intersect(b)) {
        if (std::find(boxes.begin(), boxes.end(), *c) == boxes.end()) boxes.push_back(std::move(*c));
      }
  DeWittDomain d(space_, std::move(boxes), excluded_);
  return d.excluding(other.excluded_);
}

DeWittDomain DeWittDomain::with_space(SuperSpace space) const {
  if (space.even_dim != space_.even_dim) throw SpaceMismatch("cannot change even dimension of a domain");
  DeWittDomain d = *this;
  d.space_ = space;
  return d;
}

std::vector<std::vector<Rational>> DeWittDomain::sample(std::mt19937_64& rng, std::size_t count) const {
  std::vector<std::vector<Rational>> out;
  if (boxes_.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick_box(0, boxes_.size() - 1);
  std::uniform_int_distribution<long> numer(1, 23);
  std::uniform_int_distribution<long> denom(1, 6);
  std::uniform_int_distribution<long> free_value(-20, 20);
  auto inside = [&](const Interval& side) {
    if (side.lower && side.upper) {
      Rational t = make_rational(numer(rng), 24);
      return Rational(*side.lower + (*side.upper - *side.lower) * t);
    }
    Rational offset = make_rational(numer(rng), denom(rng));
    if (side.lower) return Rational(*side.lower + offset);
    if (side.upper) return Rational(*side.upper - offset);
    return make_rational(free_value(rng), denom(rng));
  };
  for (std::size_t attempt = 0; attempt < 50 * count && out.size() < count; ++attempt) {
    const Box& box = boxes_[pick_box(rng)];
    std::vector<Rational> point;
    for (const auto& side : box.sides) point.push_back(inside(side));
    if (contains_body(point)) out.push_back(std::move(point));
  }
  return out;
}

// ---------------------------------------------------------------------------

LambdaPoint::LambdaPoint(SuperSpace space, unsigned rank, std::vector<GrassmannElement> even_values,
                         std::vector<GrassmannElement> odd_values)
    : space_(space), rank_(rank), even_(std::move(even_values)), odd_(std::move(odd_values)) {
  if (even_.size() != space_.even_dim || odd_.size() != space_.odd_dim)
    throw SpaceMismatch("lambda-point coordinate count does not match R^" + space_.to_string());
  for (const auto& v : even_) {
    if (v.rank() != rank_) throw RankMismatch("lambda-point coordinate has wrong rank");
    if (!v.is_even()) throw ParityError("even coordinate of a lambda-point must be even");
  }
  for (const auto& v : odd_) {
    if (v.rank() != rank_) throw RankMismatch("lambda-point coordinate has wrong rank");
    if (!v.is_odd()) throw ParityError("odd coordinate of a lambda-point must be odd");
  }
}

LambdaPoint LambdaPoint::zero(SuperSpace space, unsigned rank) {
  return LambdaPoint(space, rank, std::vector<GrassmannElement>(space.even_dim, GrassmannElement(rank)),
                     std::vector<GrassmannElement>(space.odd_dim, GrassmannElement(rank)));
}

LambdaPoint LambdaPoint::from_body(SuperSpace space, unsigned rank, std::span<const Rational> body) {
  if (body.size() != space.even_dim) throw SpaceMismatch("body has wrong dimension");
  LambdaPoint x = zero(space, rank);
  for (unsigned i = 0; i < space.even_dim; ++i) x.even_[i] = GrassmannElement::scalar(rank, body[i]);
  return x;
}

LambdaPoint LambdaPoint::from_vector(SuperSpace space, const SuperVector& v) {
  if (v.size() != space.total()) throw SpaceMismatch("vector has wrong dimension");
  unsigned rank = v.empty() ? 0 : v.front().rank();
  return LambdaPoint(space, rank, {v.begin(), v.begin() + space.even_dim}, {v.begin() + space.even_dim, v.end()});
}

const GrassmannElement& LambdaPoint::coordinate(unsigned i) const {
  return i < space_.even_dim ? even_.at(i) : odd_.at(i - space_.even_dim);
}

std::vector<Rational> LambdaPoint::body() const {
  std::vector<Rational> b;
  for (const auto& v : even_) b.push_back(v.body());
  return b;
}

SuperVector LambdaPoint::as_vector() const {
  SuperVector v = even_;
  v.insert(v.end(), odd_.begin(), odd_.end());
  return v;
}

LambdaPoint LambdaPoint::with_rank(unsigned rank) const {
  LambdaPoint x = *this;
  x.rank_ = rank;
  for (auto& v : x.even_) v = v.with_rank(rank);
  for (auto& v : x.odd_) v = v.with_rank(rank);
  return x;
}

LambdaPoint& LambdaPoint::operator+=(const LambdaPoint& other) {
  if (other.space_ != space_) throw SpaceMismatch("lambda-points over different spaces");
  if (other.rank_ != rank_) throw RankMismatch("lambda-points of different rank");
  for (unsigned i = 0; i < even_.size(); ++i) even_[i] += other.even_[i];
  for (unsigned i = 0; i < odd_.size(); ++i) odd_[i] += other.odd_[i];
  return *this;
}

LambdaPoint operator+(const LambdaPoint& a, const LambdaPoint& b) {
  LambdaPoint r = a;
  r += b;
  return r;
}

LambdaPoint operator-(const LambdaPoint& a, const LambdaPoint& b) {
  if (a.space_ != b.space_) throw SpaceMismatch("lambda-points over different spaces");
  LambdaPoint r = a;
  for (unsigned i = 0; i < r.even_.size(); ++i) r.even_[i] -= b.even_[i];
  for (unsigned i = 0; i < r.odd_.size(); ++i) r.odd_[i] -= b.odd_[i];
  return r;
}

PointSplit split(const LambdaPoint& x) {
  PointSplit parts;
  for (const auto& v : x.even_values()) {
    parts.body.push_back(v.body());
    parts.even_soul.push_back(v.soul());
  }
  parts.odd_part = x.odd_values();
  return parts;
}

LambdaPoint reassemble(SuperSpace space, unsigned rank, const PointSplit& parts) {
  std::vector<GrassmannElement> even;
  for (std::size_t i = 0; i < parts.body.size(); ++i)
    even.push_back(GrassmannElement::scalar(rank, parts.body[i]) + parts.even_soul.at(i));
  return LambdaPoint(space, rank, std::move(even), parts.odd_part);
}

bool contains(const DeWittDomain& domain, const LambdaPoint& x) {
  if (domain.space() != x.space())
    throw SpaceMismatch("point in R^" + x.space().to_string() + " tested against domain in R^" +
                        domain.space().to_string());
  return domain.contains_body(x.body());
}

LambdaPoint point_map(const GrassmannMorphism& m, const LambdaPoint& x) {
  if (x.rank() != m.source_rank()) throw RankMismatch("point rank does not match morphism source");
  std::vector<GrassmannElement> even, odd;
  for (const auto& v : x.even_values()) even.push_back(gapply(m, v));
  for (const auto& v : x.odd_values()) odd.push_back(gapply(m, v));
  return LambdaPoint(x.space(), m.target_rank(), std::move(even), std::move(odd));
}

SuperVector vector_map(const GrassmannMorphism& m, const SuperVector& v) {
  SuperVector out;
  for (const auto& c : v) out.push_back(gapply(m, c));
  return out;
}

}  // namespace superdom
