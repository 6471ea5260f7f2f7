#pragma once

#include <superdom/report.hpp>
#include <superdom/superfn.hpp>

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace superdom {

struct Chart {
  SuperSpace space;
  DeWittDomain domain;
};

using ChartPair = std::pair<std::string, std::string>;

/// A supermanifold given by charts, overlaps U_ij (inside chart i) and
/// transitions U_ij -> U_ji. overlap(i, i) is the chart domain and
/// transition(i, i) the identity unless set explicitly.
class GluingData {
 public:
  /// Throws Error when the id is taken.
  void add_chart(const std::string& id, SuperSpace space, DeWittDomain domain);
  void add_chart(const std::string& id, SuperSpace space) { add_chart(id, space, DeWittDomain(space)); }
  /// Throws Error for unknown charts, SpaceMismatch for a domain of the wrong dimension.
  void set_overlap(const std::string& i, const std::string& j, DeWittDomain domain);
  /// Throws Error for unknown charts, SpaceMismatch when the skeleton does not
  /// map chart i's space to chart j's. The source domain becomes overlap(i, j).
  void set_transition(const std::string& i, const std::string& j, const Skeleton& transition);

  bool has_chart(const std::string& id) const { return charts_.count(id) > 0; }
  const Chart& chart(const std::string& id) const;
  std::vector<std::string> chart_ids() const;

  bool has_overlap(const std::string& i, const std::string& j) const;
  /// Throws Error when charts i and j do not overlap.
  DeWittDomain overlap(const std::string& i, const std::string& j) const;
  bool has_transition(const std::string& i, const std::string& j) const;
  /// Throws Error when no transition is known.
  Skeleton transition(const std::string& i, const std::string& j) const;

  const std::map<ChartPair, DeWittDomain>& overlaps() const { return overlaps_; }
  const std::map<ChartPair, Skeleton>& transitions() const { return transitions_; }

 private:
  std::map<std::string, Chart> charts_;
  std::map<ChartPair, DeWittDomain> overlaps_;
  std::map<ChartPair, Skeleton> transitions_;
};

struct ManifoldPoint {
  std::string chart;
  LambdaPoint point;

  friend bool operator==(const ManifoldPoint&, const ManifoldPoint&) = default;
};

/// Identity and inverse laws for every transition, and
/// phi_ki = phi_kj o phi_ji on U_ij cap U_ik for every triple of distinct
/// charts; each symbolically and at sampled lambda-points of rank <= 4.
CheckReport check_cocycle(const GluingData& g, std::mt19937_64& rng, std::size_t samples = 25);

/// Throws Error for an unknown chart, DomainError when the body is outside
/// the overlap.
ManifoldPoint transport(const GluingData& g, const ManifoldPoint& mp, const std::string& to_chart);

/// Chartwise representatives keyed by (source chart, target chart).
using GlobalMorphism = std::map<ChartPair, Skeleton>;

/// transition2(k, l) o f_ik = f_jl o transition1(i, j) wherever both sides
/// are defined, symbolically and at sampled points.
CheckReport check_global_morphism(const GluingData& g1, const GluingData& g2, const GlobalMorphism& components,
                                  std::mt19937_64& rng, std::size_t samples = 25);

/// Charts A and B on R^{1|1}, glued over x != 0 by y = 1/x, eta = xi/x.
GluingData builtin_projective_superline();

/// x -> x^2, xi -> x xi on chart A, which reads y -> y^2, eta -> eta on chart B.
GlobalMorphism projective_superline_square();

}  // namespace superdom
