#include <doctest.h>

#include "pwl/linalg.hpp"
#include "pwl/polygon.hpp"
#include "pwl/polytope.hpp"

using namespace pwl;

namespace {

RatVec vec(std::initializer_list<long> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

HPolytope simplex(int n) {
  HPolytope p(n);
  p.add_equality(RatVec::Constant(n, Rational(1)), 1);
  for (int i = 0; i < n; ++i) {
    RatVec row = RatVec::Constant(n, Rational(0));
    row(i) = -1;
    p.add_inequality(std::move(row), 0);
  }
  return p;
}

HPolytope box(int n, long lo, long hi) {
  HPolytope p(n);
  for (int i = 0; i < n; ++i) {
    RatVec low = RatVec::Constant(n, Rational(0));
    low(i) = -1;
    p.add_inequality(std::move(low), -lo);
    RatVec high = RatVec::Constant(n, Rational(0));
    high(i) = 1;
    p.add_inequality(std::move(high), hi);
  }
  return p;
}

// Independent area oracle: plain shoelace over an explicit vertex cycle.
Rational shoelace(const std::vector<Point2>& cycle) {
  Rational twice = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point2& a = cycle[i];
    const Point2& b = cycle[(i + 1) % cycle.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return abs(twice) / 2;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("2.125") == Rational(17, 8));
  CHECK(parse_rational("1/3") == Rational(1, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational(" 0.5 ") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);

  DecimalString half = decimal_string(Rational(1, 2));
  CHECK(half.text == "0.5");
  CHECK(half.exact);
  CHECK(decimal_string(Rational(-3)).text == "-3");
  CHECK(decimal_string(Rational(1, 64)).text == "0.015625");

  DecimalString third = decimal_string(Rational(1, 3));
  CHECK_FALSE(third.exact);
  CHECK(third.text == "0.33333333333333333");
  CHECK_FALSE(decimal_string(Rational(2, 3)).exact);
  CHECK(decimal_string(Rational(2, 3)).text == "0.66666666666666667");

  CHECK(rational_string(Rational(7, 2)) == "7/2");
  CHECK(rational_string(Rational(4)) == "4");
}

TEST_CASE("linear algebra primitives") {
  RatMat a(2, 3);
  a << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  CHECK(rank<Rational>(a) == 1);
  RatMat kernel = nullspace<Rational>(a);
  CHECK(kernel.cols() == 2);
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    RatVec image = a * kernel.col(c);
    for (Eigen::Index i = 0; i < image.size(); ++i) CHECK(image(i) == 0);
  }
  auto sol = solve_linear<Rational>(a, vec({6, 12}));
  REQUIRE(sol.has_value());
  CHECK((a * *sol)(0) == 6);
  CHECK_FALSE(solve_linear<Rational>(a, vec({6, 13})).has_value());
}

TEST_CASE("simplex vertices are the unit vectors") {
  for (int n = 1; n <= 12; ++n) {
    auto verts = enumerate_vertices(simplex(n));
    REQUIRE(verts.size() == static_cast<std::size_t>(n));
    for (const RatVec& v : verts) {
      int ones = 0;
      for (int i = 0; i < n; ++i) {
        if (v(i) == 1) ++ones;
        else CHECK(v(i) == 0);
      }
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("unit square and cube corners") {
  CHECK(enumerate_vertices(box(2, 0, 1)).size() == 4);
  CHECK(enumerate_vertices(box(6, 0, 1)).size() == 64);
}

TEST_CASE("empty and unbounded polytopes are reported") {
  HPolytope empty(2);
  empty.add_inequality(vec({1, 0}), 0);
  empty.add_inequality(vec({-1, 0}), -1);  // x >= 1 and x <= 0
  CHECK_THROWS_AS(enumerate_vertices(empty), Error);

  HPolytope half(2);
  half.add_inequality(vec({1, 1}), 3);
  bool unbounded = false;
  try {
    enumerate_vertices(half);
  } catch (const Error& e) {
    unbounded = e.code() == Errc::Unbounded;
  }
  CHECK(unbounded);
}

// Log formulation for d=4 written out from the displayed inequalities, kept
// independent of the formulation builders on purpose.
TEST_CASE("log d=4 relaxation has only integral code vertices") {
  HPolytope p(7);  // lam_1..lam_5, y_1, y_2
  p.add_equality(vec({1, 1, 1, 1, 1, 0, 0}), 1);
  for (int i = 0; i < 7; ++i) {
    RatVec row = RatVec::Constant(7, Rational(0));
    row(i) = -1;
    p.add_inequality(std::move(row), 0);
  }
  for (int i = 5; i < 7; ++i) {
    RatVec row = RatVec::Constant(7, Rational(0));
    row(i) = 1;
    p.add_inequality(std::move(row), 1);
  }
  p.add_inequality(vec({0, 0, 1, 0, 0, -1, 0}), 0);    // lam3 <= y1
  p.add_inequality(vec({0, -1, -1, -1, 0, 1, 0}), 0);  // y1 <= lam2+lam3+lam4
  p.add_inequality(vec({0, 0, 0, 1, 1, 0, -1}), 0);    // lam4+lam5 <= y2
  p.add_inequality(vec({0, 0, -1, -1, -1, 0, 1}), 0);  // y2 <= lam3+lam4+lam5
  auto verts = enumerate_vertices(p);
  CHECK(verts.size() == 8);  // two lambda vertices per code
  for (const RatVec& v : verts) {
    CHECK(is_integral(v(5)));
    CHECK(is_integral(v(6)));
  }
}

TEST_CASE("enumerated vertices are extreme and basic") {
  HPolytope p = box(3, 0, 2);
  p.add_inequality(vec({1, 1, 1}), 4);
  p.add_inequality(vec({1, 2, 0}), 3);
  auto verts = enumerate_vertices(p);
  REQUIRE(verts.size() >= 6);

  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (j != i) others.push_back(verts[j]);
    }
    CHECK_FALSE(point_in_hull(others, verts[i]));

    std::vector<RatVec> active;
    for (const auto& [a, b] : p.inequalities) {
      if (a.dot(verts[i]) == b) active.push_back(a);
    }
    RatMat m(static_cast<Eigen::Index>(active.size()), 3);
    for (std::size_t r = 0; r < active.size(); ++r) {
      m.row(static_cast<Eigen::Index>(r)) = active[r].transpose();
    }
    CHECK(rank<Rational>(m) == 3);
  }
}

TEST_CASE("point in hull basics") {
  std::vector<RatVec> tri = {vec({0, 0}), vec({1, 0}), vec({0, 1})};
  RatVec inside(2);
  inside << Rational(1, 3), Rational(1, 3);
  CHECK(point_in_hull(tri, inside));
  CHECK_FALSE(point_in_hull(tri, vec({1, 1})));
  CHECK(point_in_hull(tri, vec({0, 0})));
  CHECK_THROWS_AS(point_in_hull(tri, vec({1, 1, 1})), Error);
}

TEST_CASE("change-count rows are in their own hull") {
  // C^2 built directly by counting changes of the BRGC columns (0,1,1,0) and
  // (0,0,1,1), independent of the encodings module.
  int col1[4] = {0, 1, 1, 0}, col2[4] = {0, 0, 1, 1};
  std::vector<RatVec> rows;
  int c1 = 0, c2 = 0;
  rows.push_back(vec({0, 0}));
  for (int k = 1; k < 4; ++k) {
    c1 += std::abs(col1[k] - col1[k - 1]);
    c2 += std::abs(col2[k] - col2[k - 1]);
    rows.push_back(vec({c1, c2}));
  }
  CHECK(compare(rows[3], vec({2, 1})) == 0);
  CHECK(point_in_hull(rows, vec({1, 1})));  // it is a row
}

TEST_CASE("hull facets classify lattice points") {
  std::vector<RatVec> pts = {vec({0, 0}), vec({2, 0}), vec({0, 2})};
  HullFacets facets = hull_facets(pts);
  CHECK(facets.contains(vec({1, 1})));
  CHECK(facets.contains(vec({0, 1})));
  CHECK_FALSE(facets.contains(vec({2, 1})));
}

TEST_CASE("projection to the plane") {
  HPolytope sq = box(2, 0, 1);
  RatMat id = RatMat::Identity(2, 2);
  RatVec zero = RatVec::Constant(2, Rational(0));
  Polygon2D poly = project_to_plane(sq, id, zero);
  REQUIRE(poly.vertices.size() == 4);
  CHECK(poly.vertices[0][0] == 0);
  CHECK(poly.vertices[0][1] == 0);
  CHECK(polygon_area(poly) == 1);

  HPolytope seg(2);
  seg.add_equality(vec({0, 1}), 0);
  seg.add_inequality(vec({1, 0}), 1);
  seg.add_inequality(vec({-1, 0}), 0);
  Polygon2D degenerate = project_to_plane(seg, id, zero);
  CHECK(degenerate.degenerate());
  CHECK(degenerate.vertices.size() == 2);
  CHECK(polygon_area(degenerate) == 0);
}

TEST_CASE("polygon area matches the shoelace oracle") {
  std::vector<Point2> graph = {{Rational(0), Rational(0)},
                               {Rational(1), Rational(4)},
                               {Rational(2), Rational(7)},
                               {Rational(3), Rational(9)},
                               {Rational(4), Rational(10)}};
  Polygon2D hull = convex_hull_2d(graph);
  REQUIRE(hull.vertices.size() == 5);
  CHECK(polygon_area(hull) == shoelace(hull.vertices));
  CHECK(polygon_area(hull) == 5);

  std::vector<Point2> graph8;
  long f8[] = {0, 8, 15, 21, 26, 30, 33, 35, 36};
  for (long x = 0; x <= 8; ++x) graph8.push_back({Rational(x), Rational(f8[x])});
  Polygon2D hull8 = convex_hull_2d(graph8);
  CHECK(polygon_area(hull8) == shoelace(hull8.vertices));
  CHECK(polygon_area(hull8) == 42);
}

TEST_CASE("area is translation invariant and additive under chord splits") {
  std::vector<Point2> pts = {{Rational(0), Rational(0)},
                             {Rational(4), Rational(1)},
                             {Rational(5), Rational(4)},
                             {Rational(2), Rational(6)},
                             {Rational(-1), Rational(3)}};
  Polygon2D poly = convex_hull_2d(pts);
  Rational area = polygon_area(poly);
  CHECK(area > 0);

  std::vector<Point2> shifted;
  for (const Point2& p : pts) shifted.push_back({p[0] + Rational(7, 3), p[1] - Rational(11, 5)});
  CHECK(polygon_area(convex_hull_2d(shifted)) == area);

  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the cycle
      std::vector<Point2> left(poly.vertices.begin() + i, poly.vertices.begin() + j + 1);
      std::vector<Point2> right(poly.vertices.begin() + j, poly.vertices.end());
      right.insert(right.end(), poly.vertices.begin(), poly.vertices.begin() + i + 1);
      CHECK(polygon_area(convex_hull_2d(left)) + polygon_area(convex_hull_2d(right)) == area);
    }
  }
}

TEST_CASE("lower envelopes") {
  Polygon2D square = convex_hull_2d({{Rational(0), Rational(0)},
                                     {Rational(1), Rational(0)},
                                     {Rational(1), Rational(1)},
                                     {Rational(0), Rational(1)}});
  LowerEnvelope env = lower_envelope(square);
  CHECK(env.breakpoints.size() == 2);
  CHECK(env.value_at(Rational(1, 2)) == 0);

  // Concave graph hull: the envelope is the single chord z = (10/4) x.
  Polygon2D hull = convex_hull_2d({{Rational(0), Rational(0)},
                                   {Rational(1), Rational(4)},
                                   {Rational(2), Rational(7)},
                                   {Rational(3), Rational(9)},
                                   {Rational(4), Rational(10)}});
  LowerEnvelope chord = lower_envelope(hull);
  REQUIRE(chord.breakpoints.size() == 2);
  CHECK(chord.value_at(2) == 5);
  CHECK(chord.value_at(Rational(4)) == 10);

  Polygon2D tri = convex_hull_2d(
      {{Rational(0), Rational(0)}, {Rational(2), Rational(0)}, {Rational(1), Rational(1)}});
  LowerEnvelope flat = lower_envelope(tri);
  CHECK(flat.value_at(Rational(3, 2)) == 0);

  Polygon2D point;
  point.vertices = {{Rational(1), Rational(1)}};
  CHECK_THROWS_AS(lower_envelope(point), Error);
}

TEST_CASE("strengthened proportion") {
  Polygon2D square = convex_hull_2d({{Rational(0), Rational(0)},
                                     {Rational(1), Rational(0)},
                                     {Rational(1), Rational(1)},
                                     {Rational(0), Rational(1)}});
  CHECK(strengthened_proportion(square, square, 0, 1) == 0);
  CHECK_THROWS_AS(strengthened_proportion(square, square, 1, 1), Error);

  // Envelope strictly above on exactly half the domain.
  Polygon2D raised = convex_hull_2d({{Rational(0), Rational(0)},
                                     {Rational(1, 2), Rational(0)},
                                     {Rational(1), Rational(1, 2)},
                                     {Rational(1), Rational(1)},
                                     {Rational(0), Rational(1)}});
  CHECK(strengthened_proportion(square, raised, 0, 1) == Rational(1, 2));

  // A missing half-domain counts as strengthened (infeasible = +infinity).
  Polygon2D half = convex_hull_2d({{Rational(0), Rational(0)},
                                   {Rational(1, 2), Rational(0)},
                                   {Rational(1, 2), Rational(1)},
                                   {Rational(0), Rational(1)}});
  CHECK(strengthened_proportion(square, half, 0, 1) == Rational(1, 2));
}
