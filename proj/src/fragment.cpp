#include "pwl/fragment.hpp"

#include <algorithm>

namespace pwl {

void FormulationFragment::pad_rows() {
  for (FragRow& row : rows) {
    if (row.coeffs.size() < var_count()) {
      RatVec wide = zero_row();
      wide.head(row.coeffs.size()) = row.coeffs;
      row.coeffs = std::move(wide);
    }
  }
}

FormulationFragment lambda_fragment(int m) {
  FormulationFragment frag;
  frag.lambda_count = m;
  FragRow convexity;
  convexity.name = "convexity";
  convexity.coeffs = RatVec::Constant(m, Rational(1));
  convexity.sense = Sense::Eq;
  convexity.rhs = 1;
  frag.rows.push_back(std::move(convexity));
  return frag;
}

namespace {

const FragVar& var_at(const FormulationFragment& frag, int index) {
  if (index < frag.aux_offset()) return frag.extra_vars[index - frag.extra_offset()];
  return frag.aux_vars[index - frag.aux_offset()];
}

}  // namespace

HPolytope relaxation_polytope(const FormulationFragment& frag) {
  const int n = frag.var_count();
  HPolytope poly(n);

  auto bound_rows = [&](int index, const Rational& lb, const Rational& ub) {
    RatVec low = RatVec::Constant(n, Rational(0));
    low(index) = -1;
    poly.add_inequality(std::move(low), -lb);
    RatVec up = RatVec::Constant(n, Rational(0));
    up(index) = 1;
    poly.add_inequality(std::move(up), ub);
  };

  for (int i = 0; i < frag.lambda_count; ++i) bound_rows(i, 0, 1);
  for (int i = frag.lambda_count; i < n; ++i) {
    const FragVar& v = var_at(frag, i);
    bound_rows(i, v.lb, v.ub);
  }
  for (const FragRow& row : frag.rows) {
    switch (row.sense) {
      case Sense::Le:
        poly.add_inequality(row.coeffs, row.rhs);
        break;
      case Sense::Ge:
        poly.add_inequality(-row.coeffs, -row.rhs);
        break;
      case Sense::Eq:
        poly.add_equality(row.coeffs, row.rhs);
        break;
    }
  }
  return poly;
}

HPolytope face_polytope(const FormulationFragment& frag, const std::vector<Rational>& aux_values) {
  if (static_cast<int>(aux_values.size()) != static_cast<int>(frag.aux_vars.size())) {
    throw Error(Errc::DimensionMismatch, "aux assignment length mismatch");
  }
  const int free_count = frag.aux_offset();
  HPolytope poly(free_count);

  auto bound_rows = [&](int index, const Rational& lb, const Rational& ub) {
    RatVec low = RatVec::Constant(free_count, Rational(0));
    low(index) = -1;
    poly.add_inequality(std::move(low), -lb);
    RatVec up = RatVec::Constant(free_count, Rational(0));
    up(index) = 1;
    poly.add_inequality(std::move(up), ub);
  };

  for (std::size_t i = 0; i < aux_values.size(); ++i) {
    const FragVar& v = frag.aux_vars[i];
    if (aux_values[i] < v.lb || aux_values[i] > v.ub) {
      throw Error(Errc::DomainMismatch, "aux assignment outside variable bounds");
    }
  }
  for (int i = 0; i < frag.lambda_count; ++i) bound_rows(i, 0, 1);
  for (int i = frag.lambda_count; i < free_count; ++i) {
    const FragVar& v = frag.extra_vars[i - frag.extra_offset()];
    bound_rows(i, v.lb, v.ub);
  }
  for (const FragRow& row : frag.rows) {
    RatVec head = row.coeffs.head(free_count);
    Rational shift = 0;
    for (std::size_t i = 0; i < aux_values.size(); ++i) {
      shift += row.coeffs(free_count + static_cast<int>(i)) * aux_values[i];
    }
    Rational rhs = row.rhs - shift;
    switch (row.sense) {
      case Sense::Le:
        poly.add_inequality(std::move(head), rhs);
        break;
      case Sense::Ge:
        poly.add_inequality(RatVec(-head), -rhs);
        break;
      case Sense::Eq:
        poly.add_equality(std::move(head), rhs);
        break;
    }
  }
  return poly;
}

void validate_cover_shape(const BicliqueCover& cover) {
  for (const auto& level : cover.levels) {
    for (int v : level.a) {
      if (v < 0 || v >= cover.ground_size) {
        throw Error(Errc::GroundSetMismatch, "cover element outside ground set");
      }
      if (std::find(level.b.begin(), level.b.end(), v) != level.b.end()) {
        throw Error(Errc::GroundSetMismatch, "A and B overlap within a level");
      }
    }
    for (int v : level.b) {
      if (v < 0 || v >= cover.ground_size) {
        throw Error(Errc::GroundSetMismatch, "cover element outside ground set");
      }
    }
  }
}

}  // namespace pwl
