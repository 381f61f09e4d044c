#include <doctest.h>

#include "pwl/bivariate.hpp"
#include "pwl/generate.hpp"
#include "pwl/verify.hpp"

using namespace pwl;

namespace {

GridTriangulation all_senw_2x2() {
  GridTriangulation gt;
  gt.xbreaks = {0, 1, 2};
  gt.ybreaks = {0, 1, 2};
  gt.values.resize(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) gt.values(i, j) = i + j;
  }
  gt.diag.resize(2, 2);
  gt.diag.setConstant(static_cast<int>(Diag::Senw));
  return gt;
}

int id(int i, int j) { return gridpoint_id(i - 1, j - 1, 2); }  // 1-based helper, d1 = 2

// The four-level cover from the 2x2 example, in printed level order.
BicliqueCover four_level_cover() {
  BicliqueCover c;
  c.ground_size = 9;
  c.levels.push_back({{id(1, 3), id(2, 2), id(3, 1)}, {id(1, 1), id(3, 3)}});
  c.levels.push_back({{id(2, 3), id(3, 2)}, {id(1, 2), id(2, 1)}});
  c.levels.push_back({{id(1, 3), id(2, 3), id(3, 3)}, {id(1, 1), id(2, 1), id(3, 1)}});
  c.levels.push_back({{id(3, 1), id(3, 2), id(3, 3)}, {id(1, 1), id(1, 2), id(1, 3)}});
  return c;
}

std::vector<std::pair<int, int>> coords_of(int d1, int d2) {
  std::vector<std::pair<int, int>> coords((d1 + 1) * (d2 + 1));
  for (int j = 0; j <= d2; ++j) {
    for (int i = 0; i <= d1; ++i) coords[gridpoint_id(i, j, d1)] = {i, j};
  }
  return coords;
}

}  // namespace

TEST_CASE("triangle families") {
  GridTriangulation gt = all_senw_2x2();
  TriangleFamily family = triangles(gt);
  std::vector<std::vector<int>> expected = {
      {id(1, 1), id(2, 1), id(1, 2)}, {id(2, 1), id(1, 2), id(2, 2)},
      {id(2, 1), id(3, 1), id(2, 2)}, {id(3, 1), id(2, 2), id(3, 2)},
      {id(1, 2), id(2, 2), id(1, 3)}, {id(2, 2), id(1, 3), id(2, 3)},
      {id(2, 2), id(3, 2), id(2, 3)}, {id(3, 2), id(2, 3), id(3, 3)}};
  for (auto& t : expected) std::sort(t.begin(), t.end());
  REQUIRE(family.size() == 8);
  for (std::size_t t = 0; t < 8; ++t) CHECK(family[t] == expected[t]);

  GridTriangulation cell;
  cell.xbreaks = {0, 1};
  cell.ybreaks = {0, 1};
  cell.values.resize(2, 2);
  cell.values.setConstant(Rational(0));
  cell.diag.resize(1, 1);
  cell.diag(0, 0) = static_cast<int>(Diag::Senw);
  TriangleFamily senw = triangles(cell);
  REQUIRE(senw.size() == 2);
  CHECK(senw[0] == std::vector<int>{0, 1, 2});
  CHECK(senw[1] == std::vector<int>{1, 2, 3});

  cell.diag(0, 0) = static_cast<int>(Diag::Swne);
  TriangleFamily swne = triangles(cell);
  CHECK(swne[0] == std::vector<int>{0, 1, 3});
  CHECK(swne[1] == std::vector<int>{0, 2, 3});
}

TEST_CASE("aggregated sos2 covers") {
  // LogIB level {3} times the full column range on a 4 x d2 grid.
  BicliqueCover base = build_logib_cover(4);
  BicliqueCover agg = aggregated_sos2_cover(1, base, 4, 2);
  REQUIRE(agg.levels.size() == 2);
  std::vector<int> expect_a;
  for (int j = 0; j <= 2; ++j) expect_a.push_back(gridpoint_id(2, j, 4));
  std::sort(expect_a.begin(), expect_a.end());
  CHECK(agg.levels[0].a == expect_a);

  BicliqueCover empty;
  empty.ground_size = 5;
  BicliqueCover agg_empty = aggregated_sos2_cover(1, empty, 4, 3);
  CHECK(agg_empty.levels.empty());

  // d1 = d2 = 2, axis-1 base ({3}, {1}): the column-selection level of the
  // four-level example cover.
  BicliqueCover b2 = build_logib_cover(2);
  BicliqueCover agg2 = aggregated_sos2_cover(1, b2, 2, 2);
  REQUIRE(agg2.levels.size() == 1);
  CHECK(agg2.levels[0].a == std::vector<int>({id(3, 1), id(3, 2), id(3, 3)}));
  CHECK(agg2.levels[0].b == std::vector<int>({id(1, 1), id(1, 2), id(1, 3)}));
}

TEST_CASE("six stencil covers") {
  GridTriangulation gt = all_senw_2x2();
  BicliqueCover cover = six_stencil_cover(gt);
  TriangleFamily family = triangles(gt);
  auto coords = coords_of(2, 2);
  CheckReport rep = check_biclique_representation(9, family, cover, true, &coords);
  CHECK(rep.pass);
  CHECK(cover.levels.size() <= 6);

  // All-SWNE grid: only anti-diagonal levels survive.
  GridTriangulation swne = gen_random_triangulation(3, 3, 11, Diag::Swne);
  BicliqueCover sc = six_stencil_cover(swne);
  CHECK(sc.levels.size() <= 3);
  TriangleFamily fam2 = triangles(swne);
  auto coords2 = coords_of(3, 3);
  CHECK(check_biclique_representation(16, fam2, sc, true, &coords2).pass);
  // Every point of an anti-diagonal level lies on lines of constant i+j mod 3.
  for (const auto& level : sc.levels) {
    int base = (level.a[0] / 4 + level.a[0] % 4) % 3;
    for (int v : level.a) CHECK((v / 4 + v % 4) % 3 == base);
    for (int v : level.b) CHECK((v / 4 + v % 4) % 3 == base);
  }

  for (int seed = 1; seed <= 10; ++seed) {
    GridTriangulation g = gen_random_triangulation(4, 4, seed);
    BicliqueCover c = six_stencil_cover(g);
    CHECK(c.levels.size() <= 6);
    TriangleFamily f = triangles(g);
    auto cs = coords_of(4, 4);
    CHECK(check_biclique_representation(25, f, c, true, &cs).pass);
  }
}

TEST_CASE("bivariate formulation assembly") {
  // 1x1 grid: both SOS2 parts vacuous, one triangle-selection binary remains.
  GridTriangulation cell;
  cell.xbreaks = {0, 1};
  cell.ybreaks = {0, 1};
  cell.values.resize(2, 2);
  cell.values.setConstant(Rational(0));
  cell.diag.resize(1, 1);
  cell.diag(0, 0) = static_cast<int>(Diag::Senw);
  FormulationFragment frag =
      build_bivariate(cell, Sos2Method::Log, Sos2Method::Log, six_stencil_cover(cell));
  CHECK(frag.aux_vars.size() == 1);

  // Complete four-level cover reproduces the printed eight inequalities.
  GridTriangulation gt = all_senw_2x2();
  BicliqueCover cover = four_level_cover();
  FormulationFragment eq = build_bivariate(gt, Sos2Method::LogIb, Sos2Method::LogIb, cover, true);
  CHECK(eq.aux_vars.size() == 4);
  int ib_rows = 0;
  for (const FragRow& row : eq.rows) ib_rows += row.name.rfind("tri_", 0) == 0;
  CHECK(ib_rows == 8);
  // Spot-check level 4's B row: lam_(1,1) + lam_(1,2) + lam_(1,3) + y_4 <= 1.
  for (const FragRow& row : eq.rows) {
    if (row.name == "tri_b_4") {
      CHECK(row.coeffs(id(1, 1)) == 1);
      CHECK(row.coeffs(id(1, 2)) == 1);
      CHECK(row.coeffs(id(1, 3)) == 1);
      CHECK(row.coeffs(eq.aux_offset() + 3) == 1);
      CHECK(row.rhs == 1);
    }
  }

  // A cover missing a needed level is rejected.
  BicliqueCover broken = cover;
  broken.levels.erase(broken.levels.begin());  // drop the first triangle level
  CHECK_THROWS_AS(build_bivariate(gt, Sos2Method::LogIb, Sos2Method::LogIb, broken, true), Error);

  // Composed construction: aggregated axis formulations + stencil selection.
  FormulationFragment composed =
      build_bivariate(gt, Sos2Method::Zzi, Sos2Method::Zzi, six_stencil_cover(gt));
  CHECK(composed.lambda_count == 9);
  CHECK(check_face_union(composed, triangles(gt)).pass);
}

TEST_CASE("bivariate face union on random 2x2 grids") {
  for (int seed : {1, 2, 3}) {
    GridTriangulation gt = gen_random_triangulation(2, 2, seed);
    FormulationFragment frag =
        build_bivariate(gt, Sos2Method::LogIb, Sos2Method::LogIb, six_stencil_cover(gt));
    CHECK(check_face_union(frag, triangles(gt)).pass);
  }
}
