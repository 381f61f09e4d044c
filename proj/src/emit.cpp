#include "pwl/emit.hpp"

#include <sstream>

namespace pwl {

namespace {

void check_model(const Model& model) {
  if (model.vars.empty()) throw Error(Errc::EmptyModel, "model has no variables");
  for (const ModelVar& v : model.vars) {
    if (v.name.size() > 255) throw Error(Errc::NameTooLong, "variable name too long: " + v.name);
  }
  for (const ModelCon& c : model.cons) {
    if (c.name.size() > 255) throw Error(Errc::NameTooLong, "constraint name too long: " + c.name);
  }
}

std::string number(const Rational& q, std::vector<std::string>* warnings) {
  DecimalString dec = decimal_string(q);
  if (!dec.exact && warnings != nullptr) {
    warnings->push_back("WARNING: coefficient " + rational_string(q) +
                        " is not exactly representable; wrote " + dec.text);
  }
  return dec.text;
}

// " + 2.5 x" / " - x" style term sequence.
void append_terms(std::ostringstream& out, const Model& model, const LinExpr& expr,
                  std::vector<std::string>* warnings, bool* first) {
  for (const auto& [var, coef] : expr.terms) {
    if (coef == 0) continue;
    Rational mag = coef < 0 ? Rational(-coef) : coef;
    if (*first) {
      if (coef < 0) out << "- ";
      *first = false;
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    if (mag != 1) out << number(mag, warnings) << " ";
    out << model.vars[var].name;
  }
}

}  // namespace

std::string emit_lp(const Model& model, std::vector<std::string>* warnings) {
  check_model(model);
  std::ostringstream out;
  out << (model.obj_sense == ObjSense::Minimize ? "Minimize" : "Maximize") << "\n";
  out << " obj: ";
  {
    bool first = true;
    append_terms(out, model, model.objective, warnings, &first);
    if (model.obj_offset != 0) {
      if (first) {
        out << number(model.obj_offset, warnings);
      } else {
        out << (model.obj_offset < 0 ? " - " : " + ")
            << number(model.obj_offset < 0 ? Rational(-model.obj_offset) : model.obj_offset,
                      warnings);
      }
      first = false;
    }
    if (first) out << "0 " << model.vars.front().name;
  }
  out << "\n";

  out << "Subject To\n";
  for (const ModelCon& c : model.cons) {
    out << " " << c.name << ": ";
    bool first = true;
    append_terms(out, model, c.expr, warnings, &first);
    if (first) out << "0 " << model.vars.front().name;
    switch (c.sense) {
      case Sense::Le: out << " <= "; break;
      case Sense::Ge: out << " >= "; break;
      case Sense::Eq: out << " = "; break;
    }
    out << number(c.rhs, warnings) << "\n";
  }

  out << "Bounds\n";
  for (const ModelVar& v : model.vars) {
    if (v.kind == VarKind::Binary) continue;  // implied 0/1
    bool default_lb = v.lb && *v.lb == 0;
    if (!v.lb && !v.ub) {
      out << " " << v.name << " free\n";
    } else if (v.lb && v.ub) {
      out << " " << number(*v.lb, warnings) << " <= " << v.name << " <= "
          << number(*v.ub, warnings) << "\n";
    } else if (v.lb && !v.ub) {
      if (!default_lb) out << " " << v.name << " >= " << number(*v.lb, warnings) << "\n";
    } else {
      out << " -inf <= " << v.name << " <= " << number(*v.ub, warnings) << "\n";
    }
  }

  bool any_general = false;
  for (const ModelVar& v : model.vars) any_general |= v.kind == VarKind::Integer;
  if (any_general) {
    out << "Generals\n";
    for (const ModelVar& v : model.vars) {
      if (v.kind == VarKind::Integer) out << " " << v.name << "\n";
    }
  }
  bool any_binary = false;
  for (const ModelVar& v : model.vars) any_binary |= v.kind == VarKind::Binary;
  if (any_binary) {
    out << "Binaries\n";
    for (const ModelVar& v : model.vars) {
      if (v.kind == VarKind::Binary) out << " " << v.name << "\n";
    }
  }
  out << "End\n";
  return out.str();
}

std::string emit_mps(const Model& model, std::vector<std::string>* warnings) {
  check_model(model);
  std::ostringstream out;
  out << "NAME model\n";
  out << "OBJSENSE\n    " << (model.obj_sense == ObjSense::Minimize ? "MIN" : "MAX") << "\n";
  out << "ROWS\n";
  out << " N obj\n";
  for (const ModelCon& c : model.cons) {
    char sense = c.sense == Sense::Le ? 'L' : (c.sense == Sense::Ge ? 'G' : 'E');
    out << " " << sense << " " << c.name << "\n";
  }

  // Column-major coefficients, variables in declaration order.
  std::vector<std::vector<std::pair<std::string, Rational>>> columns(model.vars.size());
  for (const auto& [var, coef] : model.objective.terms) {
    columns[var].emplace_back("obj", coef);
  }
  for (const ModelCon& c : model.cons) {
    for (const auto& [var, coef] : c.expr.terms) columns[var].emplace_back(c.name, coef);
  }

  out << "COLUMNS\n";
  bool in_integer_block = false;
  int marker = 0;
  for (std::size_t j = 0; j < model.vars.size(); ++j) {
    const ModelVar& v = model.vars[j];
    bool integral = v.kind != VarKind::Continuous;
    if (integral && !in_integer_block) {
      out << "    MARKER" << ++marker << " 'MARKER' 'INTORG'\n";
      in_integer_block = true;
    } else if (!integral && in_integer_block) {
      out << "    MARKER" << ++marker << " 'MARKER' 'INTEND'\n";
      in_integer_block = false;
    }
    if (columns[j].empty()) {
      // Every variable appears at least once so readers register it.
      out << "    " << v.name << " obj 0\n";
      continue;
    }
    for (const auto& [row, coef] : columns[j]) {
      out << "    " << v.name << " " << row << " " << number(coef, warnings) << "\n";
    }
  }
  if (in_integer_block) out << "    MARKER" << ++marker << " 'MARKER' 'INTEND'\n";

  out << "RHS\n";
  if (model.obj_offset != 0) {
    out << "    rhs obj " << number(-model.obj_offset, warnings) << "\n";
  }
  for (const ModelCon& c : model.cons) {
    if (c.rhs != 0) out << "    rhs " << c.name << " " << number(c.rhs, warnings) << "\n";
  }

  out << "BOUNDS\n";
  for (const ModelVar& v : model.vars) {
    if (v.kind == VarKind::Binary) {
      out << " BV bnd " << v.name << "\n";
      continue;
    }
    const char* li = v.kind == VarKind::Integer ? " LI bnd " : " LO bnd ";
    const char* ui = v.kind == VarKind::Integer ? " UI bnd " : " UP bnd ";
    if (!v.lb && !v.ub) {
      out << " FR bnd " << v.name << "\n";
      continue;
    }
    if (v.lb) {
      if (!(*v.lb == 0 && v.kind == VarKind::Continuous)) {
        out << li << v.name << " " << number(*v.lb, warnings) << "\n";
      }
    } else {
      out << " MI bnd " << v.name << "\n";
    }
    if (v.ub) out << ui << v.name << " " << number(*v.ub, warnings) << "\n";
  }
  out << "ENDATA\n";
  return out.str();
}

}  // namespace pwl
