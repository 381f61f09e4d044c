#include "pwl/pwl_api.hpp"

#include <algorithm>

namespace pwl {

namespace {

void check_domain(const Model& model, int x_var, const Rational& lo, const Rational& hi) {
  const ModelVar& x = model.vars[x_var];
  if (!x.lb || !x.ub || *x.lb < lo || *x.ub > hi) {
    throw Error(Errc::DomainMismatch, "x bounds must lie inside the function domain");
  }
}

Rational min_of(const std::vector<Rational>& v) { return *std::min_element(v.begin(), v.end()); }
Rational max_of(const std::vector<Rational>& v) { return *std::max_element(v.begin(), v.end()); }

void append_mc(Model& model, int x_var, int z_var, const UnivariatePWL& pwl,
               const std::string& prefix) {
  const int d = pwl.pieces();
  std::vector<int> xi(d), y(d);
  for (int i = 0; i < d; ++i) {
    Rational lo = std::min(Rational(0), pwl.breakpoints[i]);
    Rational hi = std::max(Rational(0), pwl.breakpoints[i + 1]);
    xi[i] = model.add_variable(prefix + "xsel_" + std::to_string(i + 1), VarKind::Continuous,
                               lo, hi);
    y[i] = model.add_variable(prefix + "y_" + std::to_string(i + 1), VarKind::Binary,
                              Rational(0), Rational(1));
  }
  LinExpr split;
  split.add(x_var, -1);
  for (int i = 0; i < d; ++i) split.add(xi[i], 1);
  model.add_constraint(prefix + "mc_x", std::move(split), Sense::Eq, 0);

  LinExpr value;
  value.add(z_var, -1);
  for (int i = 0; i < d; ++i) {
    value.add(xi[i], pwl.piece_slope(i));
    value.add(y[i], pwl.piece_intercept(i));
  }
  model.add_constraint(prefix + "mc_z", std::move(value), Sense::Eq, 0);

  for (int i = 0; i < d; ++i) {
    LinExpr lo;
    lo.add(xi[i], 1);
    lo.add(y[i], -pwl.breakpoints[i]);
    model.add_constraint(prefix + "mc_lo_" + std::to_string(i + 1), std::move(lo), Sense::Ge, 0);
    LinExpr hi;
    hi.add(xi[i], 1);
    hi.add(y[i], -pwl.breakpoints[i + 1]);
    model.add_constraint(prefix + "mc_hi_" + std::to_string(i + 1), std::move(hi), Sense::Le, 0);
  }
  LinExpr pick;
  for (int i = 0; i < d; ++i) pick.add(y[i], 1);
  model.add_constraint(prefix + "mc_pick", std::move(pick), Sense::Eq, 1);
}

void append_inc(Model& model, int x_var, int z_var, const UnivariatePWL& pwl,
                const std::string& prefix) {
  const int d = pwl.pieces();
  std::vector<int> delta(d), y(std::max(0, d - 1));
  for (int i = 0; i < d; ++i) {
    delta[i] = model.add_variable(prefix + "delta_" + std::to_string(i + 1), VarKind::Continuous,
                                  Rational(0), Rational(1));
  }
  for (int i = 0; i + 1 < d; ++i) {
    y[i] = model.add_variable(prefix + "y_" + std::to_string(i + 1), VarKind::Binary, Rational(0),
                              Rational(1));
  }

  LinExpr xrow;
  xrow.add(x_var, -1);
  for (int i = 0; i < d; ++i) xrow.add(delta[i], pwl.breakpoints[i + 1] - pwl.breakpoints[i]);
  model.add_constraint(prefix + "inc_x", std::move(xrow), Sense::Eq, -pwl.breakpoints.front());

  LinExpr zrow;
  zrow.add(z_var, -1);
  for (int i = 0; i < d; ++i) zrow.add(delta[i], pwl.values[i + 1] - pwl.values[i]);
  model.add_constraint(prefix + "inc_z", std::move(zrow), Sense::Eq, -pwl.values.front());

  for (int i = 0; i + 1 < d; ++i) {
    LinExpr upper;  // delta_{i+2} <= y_{i+1}
    upper.add(delta[i + 1], 1);
    upper.add(y[i], -1);
    model.add_constraint(prefix + "inc_ord_lo_" + std::to_string(i + 1), std::move(upper),
                         Sense::Le, 0);
    LinExpr lower;  // y_{i+1} <= delta_{i+1}
    lower.add(y[i], 1);
    lower.add(delta[i], -1);
    model.add_constraint(prefix + "inc_ord_hi_" + std::to_string(i + 1), std::move(lower),
                         Sense::Le, 0);
  }
}

}  // namespace

int add_univariate_pwl(Model& model, int x_var, const UnivariatePWL& pwl, Sos2Method method,
                       const std::string& prefix) {
  pwl.validate();
  check_domain(model, x_var, pwl.breakpoints.front(), pwl.breakpoints.back());
  const int d = pwl.pieces();

  Rational zlo = min_of(pwl.values);
  Rational zhi = max_of(pwl.values);
  int z_var = model.add_variable(prefix + "z", VarKind::Continuous, zlo, zhi);

  if (d == 1) {
    // Single piece: z is affine in x, no auxiliaries regardless of method.
    LinExpr row;
    row.add(z_var, 1);
    row.add(x_var, -pwl.piece_slope(0));
    model.add_constraint(prefix + "affine", std::move(row), Sense::Eq, pwl.piece_intercept(0));
    return z_var;
  }

  if (method == Sos2Method::Mc) {
    append_mc(model, x_var, z_var, pwl, prefix);
    return z_var;
  }
  if (method == Sos2Method::Inc) {
    append_inc(model, x_var, z_var, pwl, prefix);
    return z_var;
  }

  FormulationFragment frag = build_sos2_fragment(method, d);
  std::vector<int> ids(frag.var_count());
  for (int v = 0; v < frag.lambda_count; ++v) {
    ids[v] = model.add_variable(prefix + "lam_" + std::to_string(v + 1), VarKind::Continuous,
                                Rational(0), Rational(1));
  }
  for (std::size_t i = 0; i < frag.extra_vars.size(); ++i) {
    const FragVar& fv = frag.extra_vars[i];
    ids[frag.extra_offset() + static_cast<int>(i)] =
        model.add_variable(prefix + fv.name, fv.kind, fv.lb, fv.ub);
  }
  for (std::size_t i = 0; i < frag.aux_vars.size(); ++i) {
    const FragVar& fv = frag.aux_vars[i];
    ids[frag.aux_offset() + static_cast<int>(i)] =
        model.add_variable(prefix + fv.name, fv.kind, fv.lb, fv.ub);
  }
  int row_counter = 0;
  for (const FragRow& row : frag.rows) {
    LinExpr expr;
    for (int i = 0; i < frag.var_count(); ++i) {
      if (row.coeffs(i) != 0) expr.add(ids[i], row.coeffs(i));
    }
    model.add_constraint(prefix + "r" + std::to_string(++row_counter) + "_" + row.name,
                         std::move(expr), row.sense, row.rhs);
  }

  LinExpr xlink;
  xlink.add(x_var, -1);
  for (int v = 0; v <= d; ++v) xlink.add(ids[v], pwl.breakpoints[v]);
  model.add_constraint(prefix + "link_x", std::move(xlink), Sense::Eq, 0);
  LinExpr zlink;
  zlink.add(z_var, -1);
  for (int v = 0; v <= d; ++v) zlink.add(ids[v], pwl.values[v]);
  model.add_constraint(prefix + "link_z", std::move(zlink), Sense::Eq, 0);
  return z_var;
}

int add_bivariate_pwl(Model& model, int x1_var, int x2_var, const GridTriangulation& gt,
                      Sos2Method method_x, Sos2Method method_y, const std::string& prefix) {
  gt.validate();
  check_domain(model, x1_var, gt.xbreaks.front(), gt.xbreaks.back());
  check_domain(model, x2_var, gt.ybreaks.front(), gt.ybreaks.back());
  const int n1 = gt.d1();

  Rational zlo = gt.values(0, 0), zhi = gt.values(0, 0);
  for (int i = 0; i <= gt.d1(); ++i) {
    for (int j = 0; j <= gt.d2(); ++j) {
      zlo = std::min(zlo, gt.values(i, j));
      zhi = std::max(zhi, gt.values(i, j));
    }
  }
  int z_var = model.add_variable(prefix + "z", VarKind::Continuous, zlo, zhi);

  FormulationFragment frag =
      build_bivariate(gt, method_x, method_y, six_stencil_cover(gt), false);

  std::vector<int> ids(frag.var_count());
  for (int j = 0; j <= gt.d2(); ++j) {
    for (int i = 0; i <= gt.d1(); ++i) {
      ids[gridpoint_id(i, j, n1)] = model.add_variable(
          prefix + "lam_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
          VarKind::Continuous, Rational(0), Rational(1));
    }
  }
  for (std::size_t i = 0; i < frag.aux_vars.size(); ++i) {
    const FragVar& fv = frag.aux_vars[i];
    ids[frag.aux_offset() + static_cast<int>(i)] =
        model.add_variable(prefix + fv.name, fv.kind, fv.lb, fv.ub);
  }
  int row_counter = 0;
  for (const FragRow& row : frag.rows) {
    LinExpr expr;
    for (int i = 0; i < frag.var_count(); ++i) {
      if (row.coeffs(i) != 0) expr.add(ids[i], row.coeffs(i));
    }
    model.add_constraint(prefix + "r" + std::to_string(++row_counter) + "_" + row.name,
                         std::move(expr), row.sense, row.rhs);
  }

  LinExpr x1link, x2link, zlink;
  x1link.add(x1_var, -1);
  x2link.add(x2_var, -1);
  zlink.add(z_var, -1);
  for (int j = 0; j <= gt.d2(); ++j) {
    for (int i = 0; i <= gt.d1(); ++i) {
      int id = ids[gridpoint_id(i, j, n1)];
      x1link.add(id, gt.xbreaks[i]);
      x2link.add(id, gt.ybreaks[j]);
      zlink.add(id, gt.values(i, j));
    }
  }
  model.add_constraint(prefix + "link_x1", std::move(x1link), Sense::Eq, 0);
  model.add_constraint(prefix + "link_x2", std::move(x2link), Sense::Eq, 0);
  model.add_constraint(prefix + "link_z", std::move(zlink), Sense::Eq, 0);
  return z_var;
}

Model build_mc(const UnivariatePWL& pwl) {
  pwl.validate();
  Model model;
  int x = model.add_variable("x", VarKind::Continuous, pwl.breakpoints.front(),
                             pwl.breakpoints.back());
  Rational zlo = min_of(pwl.values), zhi = max_of(pwl.values);
  int z = model.add_variable("z", VarKind::Continuous, zlo, zhi);
  if (pwl.pieces() == 1) {
    LinExpr row;
    row.add(z, 1);
    row.add(x, -pwl.piece_slope(0));
    model.add_constraint("affine", std::move(row), Sense::Eq, pwl.piece_intercept(0));
  } else {
    append_mc(model, x, z, pwl, "");
  }
  return model;
}

Model build_inc(const UnivariatePWL& pwl) {
  pwl.validate();
  Model model;
  int x = model.add_variable("x", VarKind::Continuous, pwl.breakpoints.front(),
                             pwl.breakpoints.back());
  Rational zlo = min_of(pwl.values), zhi = max_of(pwl.values);
  int z = model.add_variable("z", VarKind::Continuous, zlo, zhi);
  if (pwl.pieces() == 1) {
    LinExpr row;
    row.add(z, 1);
    row.add(x, -pwl.piece_slope(0));
    model.add_constraint("affine", std::move(row), Sense::Eq, pwl.piece_intercept(0));
  } else {
    append_inc(model, x, z, pwl, "");
  }
  return model;
}

}  // namespace pwl
