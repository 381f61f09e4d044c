#pragma once

#include <utility>
#include <vector>

#include "pwl/rational.hpp"

namespace pwl {

// H-representation: {x : eq.a*x = eq.b, in.a*x <= in.b}.
struct HPolytope {
  Eigen::Index dim = 0;
  std::vector<std::pair<RatVec, Rational>> equalities;
  std::vector<std::pair<RatVec, Rational>> inequalities;

  explicit HPolytope(Eigen::Index d) : dim(d) {}

  void add_equality(RatVec a, Rational b) {
    check_row(a);
    equalities.emplace_back(std::move(a), std::move(b));
  }
  void add_inequality(RatVec a, Rational b) {
    check_row(a);
    inequalities.emplace_back(std::move(a), std::move(b));
  }

 private:
  void check_row(const RatVec& a) const {
    if (a.size() != dim) throw Error(Errc::DimensionMismatch, "constraint length != dimension");
  }
};

// All extreme points, deduplicated, sorted lexicographically. Exact double
// description on the homogenization cone; handles polytopes that are not
// full-dimensional. Throws Errc::Empty / Errc::Unbounded.
std::vector<RatVec> enumerate_vertices(const HPolytope& p);

// Exact convex-combination membership, decided by phase-1 simplex with
// Bland's rule (an algorithm independent of the double description path).
bool point_in_hull(const std::vector<RatVec>& points, const RatVec& p);

// Facet description of Conv(points): {x : eq.a*x = eq.b, in.a*x >= in.b} with
// the convention stored as (a, b) meaning a*x >= b.
struct HullFacets {
  Eigen::Index dim = 0;
  std::vector<std::pair<RatVec, Rational>> lower_bounds;  // a*x >= b
  std::vector<std::pair<RatVec, Rational>> equalities;    // a*x == b

  bool contains(const RatVec& x) const;
};

HullFacets hull_facets(const std::vector<RatVec>& points);

}  // namespace pwl
