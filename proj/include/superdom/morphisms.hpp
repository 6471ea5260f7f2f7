#pragma once

#include <superdom/report.hpp>
#include <superdom/superfn.hpp>

#include <random>
#include <span>
#include <utility>
#include <vector>

namespace superdom {

/// h(y, eta) with y_i and eta_j replaced by superfunctions on `space`.
/// Denominators are inverted as even superfunctions; their zero sets are
/// added to the result's domain. Throws DomainError when a denominator's
/// body becomes identically zero.
SuperFunction sf_substitute(const SuperFunction& h, SuperSpace space, const DeWittDomain& domain,
                            std::span<const SuperFunction> even_images, std::span<const SuperFunction> odd_images);

/// g o f by substituting f's components into g.
Skeleton compose_subst(const Skeleton& g, const Skeleton& f);

/// g o f assembled coefficient by coefficient from the alternating maps of
/// g and f: a signed sum over all permutations of the odd arguments, sliced
/// into consecutive blocks by (alpha, beta), weighted 1/(m! k! alpha! beta!).
Skeleton compose_formula(const Skeleton& g, const Skeleton& f);

/// Symbolic equality of two skeletons' coefficients plus equality at sampled
/// body points of the common source domain, on every ascending odd index.
CheckReport compare_skeletons(const Skeleton& a, const Skeleton& b, std::mt19937_64& rng, std::size_t samples = 20);

/// f^* h: h composed with f, parity parts substituted separately.
SuperFunction pullback(const Skeleton& f, const SuperFunction& h);

/// The lambda-point with the given coordinate images (p even, then q odd).
/// Throws ParityError / RankMismatch on malformed images and DomainError
/// when the body lies outside the domain.
LambdaPoint decode_point(SuperSpace space, unsigned rank, std::span<const GrassmannElement> images,
                         const DeWittDomain& domain);

/// Evaluation at a fixed lambda-point, h -> h_lambda(x).
class PointEvaluation {
 public:
  explicit PointEvaluation(LambdaPoint x) : x_(std::move(x)) {}
  const LambdaPoint& point() const { return x_; }
  GrassmannElement operator()(const SuperFunction& h) const;

 private:
  LambdaPoint x_;
};

/// Throws DomainError when x is outside the domain.
PointEvaluation encode_point(const DeWittDomain& domain, const LambdaPoint& x);

using MorphismTable = std::vector<std::pair<SuperFunction, GrassmannElement>>;

/// Decodes the point from the coordinate entries of the table and checks
/// every entry against evaluation at that point. Throws Error when a
/// coordinate is missing from the table.
CheckReport check_algebra_morphism(SuperSpace space, const DeWittDomain& domain, unsigned rank,
                                   const MorphismTable& table);

}  // namespace superdom
