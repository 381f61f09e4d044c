#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pwl/emit.hpp"
#include "pwl/generate.hpp"
#include "pwl/instance.hpp"
#include "pwl/polygon.hpp"
#include "pwl/pwl_api.hpp"

using namespace pwl;

namespace {

UnivariatePWL example_function() {
  UnivariatePWL f;
  f.breakpoints = {0, 1, 2, 3, 4};
  f.values = {0, 4, 7, 9, 10};
  return f;
}

Model example_log_model() {
  Model model;
  UnivariatePWL f = example_function();
  int x = model.add_variable("x", VarKind::Continuous, Rational(0), Rational(4));
  int z = add_univariate_pwl(model, x, f, Sos2Method::Log);
  model.objective.add(z, 1);
  model.objective.compact();
  return model;
}

std::string golden_path(const char* name) { return std::string(GOLDEN_DIR) + "/" + name; }

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("lp writer basics") {
  Model m;
  int x = m.add_variable("x", VarKind::Continuous, Rational(0), Rational(10));
  m.objective.add(x, 1);
  LinExpr e;
  e.add(x, 1);
  m.add_constraint("c1", std::move(e), Sense::Ge, Rational(1, 2));
  std::vector<std::string> warnings;
  std::string lp = emit_lp(m, &warnings);
  CHECK(lp.find("x >= 0.5") != std::string::npos);
  CHECK(warnings.empty());

  LinExpr e2;
  e2.add(x, Rational(1, 3));
  m.add_constraint("c2", std::move(e2), Sense::Le, 5);
  lp = emit_lp(m, &warnings);
  CHECK(lp.find("0.33333333333333333 x") != std::string::npos);
  CHECK(warnings.size() == 1);

  Model empty;
  CHECK_THROWS_AS(emit_lp(empty), Error);

  Model long_name;
  long_name.add_variable(std::string(300, 'v'), VarKind::Continuous, Rational(0), Rational(1));
  CHECK_THROWS_AS(emit_lp(long_name), Error);
}

TEST_CASE("example log model matches the golden lp file") {
  Model model = example_log_model();
  std::string lp = emit_lp(model);
  CHECK(lp == read_all(golden_path("example1_log.lp")));
  CHECK(lp == emit_lp(model));  // bytewise deterministic
}

TEST_CASE("mps writer structure") {
  Model model = example_log_model();
  std::string mps = emit_mps(model);
  CHECK(mps.find("OBJSENSE\n    MIN") != std::string::npos);
  CHECK(mps.find("'MARKER' 'INTORG'") != std::string::npos);
  CHECK(mps.find("ENDATA") != std::string::npos);
  CHECK(mps.find(" BV bnd y_1") != std::string::npos);
  CHECK(mps == emit_mps(model));
  CHECK(mps == read_all(golden_path("example1_log.mps")));
}

TEST_CASE("instance json ingestion") {
  std::string uni = R"({"type": "univariate",
    "breakpoints": ["0", "1", "2", "3", "4"],
    "values": ["0", "4", "7", "9", "10"]})";
  PWLInstance inst = parse_instance(uni);
  CHECK(inst.type == PWLInstance::Type::Univariate);
  CHECK(inst.univariate.pieces() == 4);
  CHECK(inst.univariate.values[2] == 7);

  std::string biv = R"({"type": "bivariate",
    "xbreaks": ["0", "1", "2"], "ybreaks": ["0", "1"],
    "values": [["0", "1"], ["1", "2"], ["2", "3"]],
    "diagonals": [["swne"], ["senw"]]})";
  PWLInstance grid = parse_instance(biv);
  CHECK(grid.bivariate.d1() == 2);
  CHECK(grid.bivariate.d2() == 1);
  CHECK(grid.bivariate.diag_at(1, 0) == Diag::Senw);

  // Exact ingestion: floating literals are rejected, decimal strings parse.
  CHECK_THROWS_AS(parse_instance(R"({"type": "univariate",
    "breakpoints": [0, 0.5], "values": [0, 1]})"),
                  Error);
  PWLInstance dec = parse_instance(R"({"type": "univariate",
    "breakpoints": ["0", "0.5"], "values": ["0", "1.25"]})");
  CHECK(dec.univariate.values[1] == Rational(5, 4));

  CHECK_THROWS_AS(parse_instance(R"({"type": "univariate",
    "breakpoints": ["1", "0"], "values": ["0", "1"]})"),
                  Error);

  // Round trip through the serializer.
  PWLInstance back = parse_instance(instance_to_json(grid));
  CHECK(back.bivariate.values(2, 1) == 3);
  CHECK(back.bivariate.diag_at(0, 0) == Diag::Swne);
}

TEST_CASE("univariate modeling entry point") {
  Model model;
  UnivariatePWL f = example_function();
  int x = model.add_variable("x", VarKind::Continuous, Rational(0), Rational(4));
  add_univariate_pwl(model, x, f, Sos2Method::Zzi);
  int integers = 0;
  for (const ModelVar& v : model.vars) integers += v.kind == VarKind::Integer;
  CHECK(integers == 2);

  // Single piece: affine row, no auxiliaries.
  Model flat;
  UnivariatePWL one;
  one.breakpoints = {0, 2};
  one.values = {1, 5};
  int x2 = flat.add_variable("x", VarKind::Continuous, Rational(0), Rational(2));
  add_univariate_pwl(flat, x2, one, Sos2Method::Log);
  for (const ModelVar& v : flat.vars) CHECK(v.kind == VarKind::Continuous);

  // Eight pieces with the integer zig-zag: aux upper bounds are (4, 2, 1).
  Model m8;
  UnivariatePWL f8;
  f8.breakpoints = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  f8.values = {0, 8, 15, 21, 26, 30, 33, 35, 36};
  int x8 = m8.add_variable("x", VarKind::Continuous, Rational(0), Rational(8));
  add_univariate_pwl(m8, x8, f8, Sos2Method::Zzi);
  CHECK(*m8.vars[m8.variable("y_1")].ub == 4);
  CHECK(*m8.vars[m8.variable("y_2")].ub == 2);
  CHECK(*m8.vars[m8.variable("y_3")].ub == 1);

  // Domain mismatch is rejected.
  Model wide;
  int xw = wide.add_variable("x", VarKind::Continuous, Rational(-1), Rational(4));
  CHECK_THROWS_AS(add_univariate_pwl(wide, xw, f, Sos2Method::Log), Error);
}

TEST_CASE("sharp methods project onto the graph hull") {
  UnivariatePWL f = example_function();
  std::vector<Point2> graph;
  for (std::size_t v = 0; v < f.breakpoints.size(); ++v) {
    graph.push_back({f.breakpoints[v], f.values[v]});
  }
  Polygon2D hull = convex_hull_2d(graph);

  for (Sos2Method method : {Sos2Method::Cc, Sos2Method::Log, Sos2Method::Zzb, Sos2Method::Inc}) {
    Model model;
    int x = model.add_variable("x", VarKind::Continuous, Rational(0), Rational(4));
    if (method == Sos2Method::Inc) {
      model = build_inc(f);
    } else {
      add_univariate_pwl(model, x, f, method);
    }
    HPolytope poly = model_relaxation(model);
    RatMat map = RatMat::Constant(2, poly.dim, Rational(0));
    map(0, model.variable("x")) = 1;
    map(1, model.variable("z")) = 1;
    Polygon2D proj = project_to_plane(poly, map, RatVec::Constant(2, Rational(0)));
    REQUIRE(proj.vertices.size() == hull.vertices.size());
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
      CHECK(proj.vertices[i][0] == hull.vertices[i][0]);
      CHECK(proj.vertices[i][1] == hull.vertices[i][1]);
    }
  }
}

TEST_CASE("transport generator shape and determinism") {
  TransportInstance inst = gen_transport_univariate(10, 10, 8, 1, false);
  CHECK(inst.arc_costs.size() == 100);
  Rational total_supply = 0, total_demand = 0;
  for (const Rational& s : inst.supplies) total_supply += s;
  for (const Rational& d : inst.demands) total_demand += d;
  CHECK(total_supply == total_demand);
  for (const UnivariatePWL& arc : inst.arc_costs) {
    CHECK(arc.breakpoints.size() == 9);
    // Concave nondecreasing: strictly decreasing positive slopes.
    Rational prev_slope = 0;
    for (int i = 0; i < arc.pieces(); ++i) {
      Rational slope = arc.piece_slope(i);
      CHECK(slope > 0);
      if (i > 0) CHECK(slope < prev_slope);
      prev_slope = slope;
    }
  }

  TransportInstance dropped = gen_transport_univariate(10, 10, 8, 1, true);
  for (const UnivariatePWL& arc : dropped.arc_costs) CHECK(arc.pieces() == 6);

  Model a = transport_model(gen_transport_univariate(4, 4, 8, 7, true), Sos2Method::Zzb);
  Model b = transport_model(gen_transport_univariate(4, 4, 8, 7, true), Sos2Method::Zzb);
  CHECK(emit_mps(a) == emit_mps(b));
  Model c = transport_model(gen_transport_univariate(4, 4, 8, 8, true), Sos2Method::Zzb);
  CHECK(emit_mps(a) != emit_mps(c));
}

TEST_CASE("random triangulation generator") {
  GridTriangulation a = gen_random_triangulation(2, 2, 5);
  GridTriangulation b = gen_random_triangulation(2, 2, 5);
  CHECK(a.diag == b.diag);
  GridTriangulation forced = gen_random_triangulation(3, 2, 5, Diag::Swne);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) CHECK(forced.diag_at(i, j) == Diag::Swne);
  }
  // Values are nondecreasing along both axes.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j <= 2; ++j) CHECK(a.values(i, j) <= a.values(i + 1, j));
  }
}

TEST_CASE("bivariate modeling entry point") {
  GridTriangulation cell;
  cell.xbreaks = {0, 1};
  cell.ybreaks = {0, 1};
  cell.values.resize(2, 2);
  cell.values.setConstant(Rational(0));
  cell.diag.resize(1, 1);
  cell.diag(0, 0) = static_cast<int>(Diag::Swne);

  Model model;
  int x1 = model.add_variable("x1", VarKind::Continuous, Rational(0), Rational(1));
  int x2 = model.add_variable("x2", VarKind::Continuous, Rational(0), Rational(1));
  add_bivariate_pwl(model, x1, x2, cell, Sos2Method::Log, Sos2Method::Log);
  int binaries = 0;
  for (const ModelVar& v : model.vars) binaries += v.kind != VarKind::Continuous;
  CHECK(binaries == 1);

  // 8x8 grid with log on both axes: 3 + 3 + at most 6 levels.
  GridTriangulation big = gen_random_triangulation(8, 8, 9);
  Model wide;
  int w1 = wide.add_variable("x1", VarKind::Continuous, Rational(0), Rational(8));
  int w2 = wide.add_variable("x2", VarKind::Continuous, Rational(0), Rational(8));
  add_bivariate_pwl(wide, w1, w2, big, Sos2Method::Log, Sos2Method::Log);
  int aux = 0;
  for (const ModelVar& v : wide.vars) aux += v.kind != VarKind::Continuous;
  CHECK(aux <= 12);
  CHECK(aux >= 7);
}
