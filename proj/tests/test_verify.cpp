#include <doctest.h>

#include "pwl/bivariate.hpp"
#include "pwl/verify.hpp"

using namespace pwl;

namespace {

std::vector<std::vector<int>> sos2_family(int d) {
  std::vector<std::vector<int>> family;
  for (int i = 0; i < d; ++i) family.push_back({i, i + 1});
  return family;
}

UnivariatePWL example_function() {
  UnivariatePWL f;
  f.breakpoints = {0, 1, 2, 3, 4};
  f.values = {0, 4, 7, 9, 10};
  return f;
}

std::vector<Rational> code(std::initializer_list<long> xs) {
  return std::vector<Rational>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("biclique representation checks") {
  CHECK(check_biclique_representation(5, sos2_family(4), build_logib_cover(4)).pass);
  CHECK(check_biclique_representation(4, sos2_family(3), build_logib_cover(3)).pass);

  // Breaking disjointness or coverage surfaces a witness.
  BicliqueCover overlap = build_logib_cover(4);
  overlap.levels[0].b.push_back(overlap.levels[0].a[0]);
  CheckReport rep = check_biclique_representation(5, sos2_family(4), overlap);
  CHECK_FALSE(rep.pass);

  BicliqueCover missing = build_logib_cover(4);
  missing.levels.pop_back();
  CheckReport rep2 = check_biclique_representation(5, sos2_family(4), missing);
  CHECK_FALSE(rep2.pass);
  CHECK(rep2.detail.find("uncovered pair") != std::string::npos);
}

TEST_CASE("faces by code") {
  FormulationFragment zzi4 = build_sos2_fragment(Sos2Method::Zzi, 4);
  auto face = faces_by_code(zzi4, code({2, 1}));
  CHECK(face_equals(face, 5, {3, 4}));  // P({4, 5}) in one-based terms

  FormulationFragment logib3 = build_sos2_fragment(Sos2Method::LogIb, 3);
  auto redundant = faces_by_code(logib3, code({0, 1}));
  CHECK(face_equals(redundant, 4, {3}));  // the redundant singleton P({4})

  FormulationFragment log3 = build_sos2_fragment(Sos2Method::Log, 3);
  CHECK(faces_by_code(log3, code({0, 1})).empty());  // empty face

  CHECK_THROWS_AS(faces_by_code(zzi4, code({9, 0})), Error);  // out of bounds
}

TEST_CASE("idealness checks") {
  CheckReport cc = check_ideal(build_sos2_fragment(Sos2Method::Cc, 4));
  CHECK_FALSE(cc.pass);
  CHECK(cc.detail.find("fractional") != std::string::npos);

  CHECK(check_ideal(build_sos2_fragment(Sos2Method::Zzb, 8)).pass);

  // Idealness agrees across the unimodular pair.
  for (int d : {3, 6}) {
    CHECK(check_ideal(build_sos2_fragment(Sos2Method::Zzb, d)).pass ==
          check_ideal(build_sos2_fragment(Sos2Method::Zzi, d)).pass);
  }
}

TEST_CASE("lambda sharpness checks") {
  CHECK(check_sharp_lambda(build_sos2_fragment(Sos2Method::Cc, 4)).pass);
  CHECK(check_sharp_lambda(build_sos2_fragment(Sos2Method::Log, 4)).pass);

  FormulationFragment pinned = build_sos2_fragment(Sos2Method::Log, 4);
  FragRow kill;
  kill.name = "pin";
  kill.coeffs = pinned.zero_row();
  kill.coeffs(0) = 1;
  kill.sense = Sense::Eq;
  kill.rhs = 0;
  pinned.rows.push_back(std::move(kill));
  CheckReport rep = check_sharp_lambda(pinned);
  CHECK_FALSE(rep.pass);
  CHECK(rep.detail.find("e_1") != std::string::npos);
}

TEST_CASE("branching metrics on the four-piece example") {
  UnivariatePWL f = example_function();

  BranchMetrics base = branching_metrics(f, Sos2Method::Log, std::nullopt);
  // Exact area of Conv(gr f): shoelace over (0,0),(4,10),(3,9),(2,7),(1,4).
  CHECK(base.volume == 5);
  CHECK(base.proportion == 0);
  CHECK(branching_metrics(f, Sos2Method::Zzi, std::nullopt).volume == 5);

  auto metric = [&](Sos2Method m, Sense dir, long bound) {
    return branching_metrics(f, m, BranchSpec{0, dir, Rational(bound)});
  };
  // Log down-branch: lam_3 = 0, hull of the remaining graph points.
  BranchMetrics log_down = metric(Sos2Method::Log, Sense::Le, 0);
  CHECK(log_down.volume == Rational(9, 2));
  CHECK(log_down.proportion == 0);
  BranchMetrics log_up = metric(Sos2Method::Log, Sense::Ge, 1);
  CHECK(log_up.volume == Rational(1, 2));
  CHECK(log_up.proportion == 1);

  BranchMetrics zzi_d0 = metric(Sos2Method::Zzi, Sense::Le, 0);
  CHECK(zzi_d0.volume == 0);
  CHECK(zzi_d0.proportion == 1);
  BranchMetrics zzi_u1 = metric(Sos2Method::Zzi, Sense::Ge, 1);
  CHECK(zzi_u1.volume == Rational(7, 2));
  CHECK(zzi_u1.proportion == Rational(1, 2));
  BranchMetrics zzi_d1 = metric(Sos2Method::Zzi, Sense::Le, 1);
  CHECK(zzi_d1.volume == Rational(7, 2));
  CHECK(zzi_d1.proportion == Rational(1, 2));
  BranchMetrics zzi_u2 = metric(Sos2Method::Zzi, Sense::Ge, 2);
  CHECK(zzi_u2.volume == 0);
  CHECK(zzi_u2.proportion == 1);

  // Complementary branch volumes at each threshold sum to the same total.
  CHECK(zzi_d0.volume + zzi_u1.volume == Rational(7, 2));
  CHECK(zzi_d1.volume + zzi_u2.volume == Rational(7, 2));

  // Vacuous bound: unbranched volume, proportion zero.
  BranchMetrics vacuous = metric(Sos2Method::Zzi, Sense::Le, 2);
  CHECK(vacuous.volume == base.volume);
  CHECK(vacuous.proportion == 0);

  // Empty branch: volume zero, proportion one.
  BranchMetrics infeasible = branching_metrics(f, Sos2Method::Log, BranchSpec{0, Sense::Ge, 2});
  CHECK(infeasible.volume == 0);
  CHECK(infeasible.proportion == 1);
  CHECK_FALSE(infeasible.polygon.has_value());
}

TEST_CASE("branching metrics on the eight-piece appendix function") {
  UnivariatePWL f;
  f.breakpoints = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  f.values = {0, 8, 15, 21, 26, 30, 33, 35, 36};

  BranchMetrics d1 = branching_metrics(f, Sos2Method::Zzi, BranchSpec{0, Sense::Le, 1});
  CHECK(d1.volume == Rational(23, 2));
  CHECK(d1.proportion == Rational(3, 4));
}

TEST_CASE("redundant embedding of the power-of-two log formulation") {
  FormulationFragment log4 = build_sos2_fragment(Sos2Method::Log, 4);
  CodeMatrix codes = brgc(2);
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < 4; ++i) rows.push_back({codes.entries(i, 0), codes.entries(i, 1)});
  RedundantReport rep = check_redundant_embedding(log4, sos2_family(4), rows);
  CHECK(rep.pass);
  CHECK(rep.proj_y.size() == 4);  // exactly the code rows, no redundant faces
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(std::find(rep.proj_y.begin(), rep.proj_y.end(), rows[i]) != rep.proj_y.end());
  }
}

TEST_CASE("redundant embedding scale guard") {
  FormulationFragment big = lambda_fragment(2);
  for (int i = 0; i < 13; ++i) {
    big.aux_vars.push_back(FragVar{"y" + std::to_string(i), VarKind::Binary, 0, 1});
  }
  big.pad_rows();
  CHECK_THROWS_AS(check_redundant_embedding(big, sos2_family(1), {}), Error);
}
