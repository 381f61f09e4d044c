#pragma once

#include <array>
#include <vector>

#include "pwl/polytope.hpp"
#include "pwl/rational.hpp"

namespace pwl {

using Point2 = std::array<Rational, 2>;

// Convex polygon in canonical form: counter-clockwise, no three consecutive
// collinear vertices, first vertex lexicographically minimal. One vertex is a
// point, two a segment; both count as degenerate and have area zero.
struct Polygon2D {
  std::vector<Point2> vertices;
  bool degenerate() const { return vertices.size() < 3; }
};

Polygon2D convex_hull_2d(std::vector<Point2> points);

Rational polygon_area(const Polygon2D& poly);

// Pointwise-minimum z over a polygon as a continuous PWL function of x.
struct LowerEnvelope {
  std::vector<Rational> breakpoints;  // strictly increasing
  std::vector<Rational> values;       // z at each breakpoint

  Rational x_min() const { return breakpoints.front(); }
  Rational x_max() const { return breakpoints.back(); }
  Rational value_at(const Rational& x) const;
};

LowerEnvelope lower_envelope(const Polygon2D& poly);

// Fraction of [lo, hi] on which the branched relaxation's lower envelope
// strictly exceeds the original's. Where the branched region is infeasible
// its bound is +infinity, which counts as strengthened.
Rational strengthened_proportion(const Polygon2D& original, const Polygon2D& branched,
                                 const Rational& lo, const Rational& hi);

// Image of the polytope under x -> map*x + offset (map is 2 x dim), as the
// canonical hull of the projected vertices.
Polygon2D project_to_plane(const HPolytope& p, const RatMat& map, const RatVec& offset);

}  // namespace pwl
