#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pwl/fragment.hpp"
#include "pwl/polytope.hpp"
#include "pwl/rational.hpp"

namespace pwl {

struct ModelVar {
  std::string name;
  VarKind kind = VarKind::Continuous;
  std::optional<Rational> lb;  // nullopt = -infinity
  std::optional<Rational> ub;  // nullopt = +infinity
};

// Linear expression as sorted sparse terms over variable ids.
struct LinExpr {
  std::vector<std::pair<int, Rational>> terms;

  void add(int var, Rational coef);
  void compact();
};

struct ModelCon {
  std::string name;
  LinExpr expr;
  Sense sense = Sense::Le;
  Rational rhs = 0;
};

enum class ObjSense { Minimize, Maximize };

// Solver-agnostic MIP: typed variables, linear constraints, one objective.
struct Model {
  std::vector<ModelVar> vars;
  std::vector<ModelCon> cons;
  ObjSense obj_sense = ObjSense::Minimize;
  LinExpr objective;
  Rational obj_offset = 0;

  int add_variable(const std::string& name, VarKind kind, std::optional<Rational> lb,
                   std::optional<Rational> ub);
  void add_constraint(const std::string& name, LinExpr expr, Sense sense, Rational rhs);
  int variable(const std::string& name) const;

 private:
  std::map<std::string, int> index_;
};

// LP relaxation of the model; requires finite bounds on every variable that
// has any (vertex enumeration needs bounded polytopes).
HPolytope model_relaxation(const Model& model);

}  // namespace pwl
