#include "pwl/polygon.hpp"

#include <algorithm>

namespace pwl {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool point_less(const Point2& a, const Point2& b) {
  int c = cmp(a[0], b[0]);
  if (c != 0) return c < 0;
  return a[1] < b[1];
}

bool point_eq(const Point2& a, const Point2& b) { return a[0] == b[0] && a[1] == b[1]; }

}  // namespace

Polygon2D convex_hull_2d(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(), point_less);
  points.erase(std::unique(points.begin(), points.end(), point_eq), points.end());

  Polygon2D poly;
  if (points.size() <= 2) {
    poly.vertices = std::move(points);
    return poly;
  }

  // Andrew monotone chain with strict turns; the concatenation is CCW and
  // starts at the lexicographic minimum.
  std::vector<Point2> hull;
  for (const Point2& p : points) {  // lower chain
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  std::size_t lower_size = hull.size();
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {  // upper chain
    while (hull.size() > lower_size && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();  // first point repeated

  if (hull.size() == 2 && points.size() > 2) {
    // All points collinear: keep the extreme pair only.
    poly.vertices = {hull[0], hull[1]};
    return poly;
  }
  poly.vertices = std::move(hull);
  return poly;
}

Rational polygon_area(const Polygon2D& poly) {
  if (poly.degenerate()) return 0;
  Rational twice = 0;
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return twice / 2;
}

Rational LowerEnvelope::value_at(const Rational& x) const {
  if (x < breakpoints.front() || x > breakpoints.back()) {
    throw Error(Errc::DomainMismatch, "envelope evaluated outside its x-range");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (x <= breakpoints[i + 1]) {
      const Rational& x0 = breakpoints[i];
      const Rational& x1 = breakpoints[i + 1];
      return values[i] + (values[i + 1] - values[i]) * (x - x0) / (x1 - x0);
    }
  }
  return values.back();
}

LowerEnvelope lower_envelope(const Polygon2D& poly) {
  const auto& v = poly.vertices;
  if (v.empty()) throw Error(Errc::Empty, "envelope of empty polygon");
  if (v.size() == 1) throw Error(Errc::DegeneratePoint, "envelope of a single point");

  LowerEnvelope env;
  if (v.size() == 2) {
    if (v[0][0] == v[1][0]) {
      env.breakpoints = {v[0][0]};
      env.values = {std::min(v[0][1], v[1][1])};
    } else {
      env.breakpoints = {v[0][0], v[1][0]};
      env.values = {v[0][1], v[1][1]};
    }
    return env;
  }

  // CCW from the leftmost-lowest vertex: the lower chain is the prefix with
  // strictly increasing x.
  env.breakpoints.push_back(v[0][0]);
  env.values.push_back(v[0][1]);
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i][0] <= env.breakpoints.back()) break;
    env.breakpoints.push_back(v[i][0]);
    env.values.push_back(v[i][1]);
  }
  return env;
}

namespace {

// Measure of {x in [a, b] : g(x) > 0} for the affine g with endpoint values
// ga, gb.
Rational positive_measure(const Rational& a, const Rational& b, const Rational& ga,
                          const Rational& gb) {
  if (ga <= 0 && gb <= 0) return 0;
  if (ga >= 0 && gb >= 0) return b - a;
  Rational root = a + (b - a) * ga / (ga - gb);
  if (ga > 0) return root - a;
  return b - root;
}

}  // namespace

Rational strengthened_proportion(const Polygon2D& original, const Polygon2D& branched,
                                 const Rational& lo, const Rational& hi) {
  if (hi <= lo) throw Error(Errc::EmptyDomain, "empty branching domain");

  LowerEnvelope orig = lower_envelope(original);

  Rational blo, bhi;
  LowerEnvelope bran;
  bool branched_point = branched.vertices.size() == 1;
  if (branched_point) {
    blo = bhi = branched.vertices[0][0];
  } else {
    bran = lower_envelope(branched);
    blo = bran.x_min();
    bhi = bran.x_max();
  }

  Rational ilo = std::max(lo, blo);
  Rational ihi = std::min(hi, bhi);
  Rational infeasible = (hi - lo) - (ihi > ilo ? ihi - ilo : Rational(0));
  Rational strengthened = infeasible;

  if (ihi > ilo && !branched_point) {
    std::vector<Rational> cuts;
    cuts.push_back(ilo);
    for (const Rational& x : orig.breakpoints) {
      if (x > ilo && x < ihi) cuts.push_back(x);
    }
    for (const Rational& x : bran.breakpoints) {
      if (x > ilo && x < ihi) cuts.push_back(x);
    }
    cuts.push_back(ihi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rational& a = cuts[i];
      const Rational& b = cuts[i + 1];
      Rational ga = bran.value_at(a) - orig.value_at(a);
      Rational gb = bran.value_at(b) - orig.value_at(b);
      strengthened += positive_measure(a, b, ga, gb);
    }
  }
  return strengthened / (hi - lo);
}

Polygon2D project_to_plane(const HPolytope& p, const RatMat& map, const RatVec& offset) {
  if (map.rows() != 2 || map.cols() != p.dim || offset.size() != 2) {
    throw Error(Errc::DimensionMismatch, "projection map must be 2 x dim");
  }
  std::vector<RatVec> vertices = enumerate_vertices(p);
  std::vector<Point2> images;
  images.reserve(vertices.size());
  for (const RatVec& v : vertices) {
    RatVec w = map * v + offset;
    images.push_back({w(0), w(1)});
  }
  return convex_hull_2d(std::move(images));
}

}  // namespace pwl
