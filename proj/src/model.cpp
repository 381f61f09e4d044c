#include "pwl/model.hpp"

#include <algorithm>

namespace pwl {

void LinExpr::add(int var, Rational coef) {
  terms.emplace_back(var, std::move(coef));
}

void LinExpr::compact() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rational>> merged;
  for (auto& [var, coef] : terms) {
    if (!merged.empty() && merged.back().first == var) {
      merged.back().second += coef;
    } else {
      merged.emplace_back(var, std::move(coef));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& t) { return t.second == 0; }),
               merged.end());
  terms = std::move(merged);
}

int Model::add_variable(const std::string& name, VarKind kind, std::optional<Rational> lb,
                        std::optional<Rational> ub) {
  if (index_.count(name) != 0) {
    throw Error(Errc::ParseError, "duplicate variable name: " + name);
  }
  int id = static_cast<int>(vars.size());
  vars.push_back(ModelVar{name, kind, std::move(lb), std::move(ub)});
  index_[name] = id;
  return id;
}

void Model::add_constraint(const std::string& name, LinExpr expr, Sense sense, Rational rhs) {
  expr.compact();
  for (const auto& [var, coef] : expr.terms) {
    if (var < 0 || var >= static_cast<int>(vars.size())) {
      throw Error(Errc::DimensionMismatch, "constraint references unknown variable");
    }
  }
  cons.push_back(ModelCon{name, std::move(expr), sense, std::move(rhs)});
}

int Model::variable(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(Errc::ParseError, "unknown variable: " + name);
  return it->second;
}

HPolytope model_relaxation(const Model& model) {
  const int n = static_cast<int>(model.vars.size());
  HPolytope poly(n);
  for (int i = 0; i < n; ++i) {
    const ModelVar& v = model.vars[i];
    if (v.lb) {
      RatVec row = RatVec::Constant(n, Rational(0));
      row(i) = -1;
      poly.add_inequality(std::move(row), -*v.lb);
    }
    if (v.ub) {
      RatVec row = RatVec::Constant(n, Rational(0));
      row(i) = 1;
      poly.add_inequality(std::move(row), *v.ub);
    }
  }
  for (const ModelCon& c : model.cons) {
    RatVec row = RatVec::Constant(n, Rational(0));
    for (const auto& [var, coef] : c.expr.terms) row(var) = coef;
    switch (c.sense) {
      case Sense::Le:
        poly.add_inequality(std::move(row), c.rhs);
        break;
      case Sense::Ge:
        poly.add_inequality(RatVec(-row), -c.rhs);
        break;
      case Sense::Eq:
        poly.add_equality(std::move(row), c.rhs);
        break;
    }
  }
  return poly;
}

}  // namespace pwl
