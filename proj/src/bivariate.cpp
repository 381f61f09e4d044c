#include "pwl/bivariate.hpp"

#include <algorithm>

#include "pwl/verify.hpp"

namespace pwl {

void GridTriangulation::validate() const {
  if (xbreaks.size() < 2 || ybreaks.size() < 2) {
    throw Error(Errc::DomainMismatch, "grid needs at least one cell per axis");
  }
  for (std::size_t i = 0; i + 1 < xbreaks.size(); ++i) {
    if (xbreaks[i] >= xbreaks[i + 1]) throw Error(Errc::DomainMismatch, "xbreaks not increasing");
  }
  for (std::size_t j = 0; j + 1 < ybreaks.size(); ++j) {
    if (ybreaks[j] >= ybreaks[j + 1]) throw Error(Errc::DomainMismatch, "ybreaks not increasing");
  }
  if (values.rows() != static_cast<Eigen::Index>(xbreaks.size()) ||
      values.cols() != static_cast<Eigen::Index>(ybreaks.size())) {
    throw Error(Errc::DimensionMismatch, "value grid shape mismatch");
  }
  if (diag.rows() != d1() || diag.cols() != d2()) {
    throw Error(Errc::DimensionMismatch, "diagonal grid shape mismatch");
  }
}

TriangleFamily triangles(const GridTriangulation& gt) {
  gt.validate();
  TriangleFamily family;
  const int n1 = gt.d1();
  for (int j = 0; j < gt.d2(); ++j) {
    for (int i = 0; i < gt.d1(); ++i) {
      int sw = gridpoint_id(i, j, n1);
      int se = gridpoint_id(i + 1, j, n1);
      int nw = gridpoint_id(i, j + 1, n1);
      int ne = gridpoint_id(i + 1, j + 1, n1);
      std::vector<int> first, second;
      if (gt.diag_at(i, j) == Diag::Swne) {
        first = {sw, se, ne};
        second = {sw, nw, ne};
      } else {
        first = {sw, se, nw};
        second = {se, nw, ne};
      }
      std::sort(first.begin(), first.end());
      std::sort(second.begin(), second.end());
      family.push_back(std::move(first));
      family.push_back(std::move(second));
    }
  }
  return family;
}

BicliqueCover aggregated_sos2_cover(int axis, const BicliqueCover& base, int d1, int d2) {
  if (axis != 1 && axis != 2) throw Error(Errc::DomainMismatch, "axis must be 1 or 2");
  const int along = axis == 1 ? d1 + 1 : d2 + 1;
  if (base.ground_size != along) {
    throw Error(Errc::GroundSetMismatch, "base cover does not match axis breakpoint count");
  }
  BicliqueCover cover;
  cover.ground_size = (d1 + 1) * (d2 + 1);
  for (const auto& level : base.levels) {
    BicliqueCover::Level out;
    auto expand = [&](const std::vector<int>& side, std::vector<int>& target) {
      for (int v : side) {
        if (axis == 1) {
          for (int j = 0; j <= d2; ++j) target.push_back(gridpoint_id(v, j, d1));
        } else {
          for (int i = 0; i <= d1; ++i) target.push_back(gridpoint_id(i, v, d1));
        }
      }
      std::sort(target.begin(), target.end());
    };
    expand(level.a, out.a);
    expand(level.b, out.b);
    cover.levels.push_back(std::move(out));
  }
  return cover;
}

namespace {

struct LinePoint {
  int i, j;
};

// Assigns alternating sides along one line: a point participates iff one of
// its in-line neighbor pairs is a forbidden (non-coface) diagonal; sides flip
// exactly across forbidden pairs and persist across triangulation diagonals.
void sweep_line(const std::vector<LinePoint>& pts, const std::vector<bool>& edge, int d1,
                BicliqueCover::Level& level) {
  bool side_a = true;
  bool started = false;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    bool participates = (k > 0 && edge[k - 1]) || (k < edge.size() && edge[k]);
    if (!participates) continue;
    if (started && edge[k - 1]) side_a = !side_a;
    started = true;
    int id = gridpoint_id(pts[k].i, pts[k].j, d1);
    (side_a ? level.a : level.b).push_back(id);
  }
}

}  // namespace

BicliqueCover six_stencil_cover(const GridTriangulation& gt) {
  gt.validate();
  const int n1 = gt.d1();
  const int n2 = gt.d2();

  BicliqueCover::Level diag_levels[3];
  BicliqueCover::Level anti_levels[3];
  auto group_of = [](int offset) { return ((offset % 3) + 3) % 3; };

  // Diagonal lines j = i + o carry the forbidden pairs of SENW cells.
  for (int o = -n1; o <= n2; ++o) {
    std::vector<LinePoint> pts;
    for (int i = std::max(0, -o); i <= std::min(n1, n2 - o); ++i) pts.push_back({i, i + o});
    if (pts.size() < 2) continue;
    std::vector<bool> edge(pts.size() - 1, false);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      edge[k] = gt.diag_at(pts[k].i, pts[k].j) == Diag::Senw;
    }
    sweep_line(pts, edge, n1, diag_levels[group_of(o)]);
  }

  // Anti-diagonal lines i + j = s carry the forbidden pairs of SWNE cells.
  for (int s = 0; s <= n1 + n2; ++s) {
    std::vector<LinePoint> pts;
    for (int i = std::max(0, s - n2); i <= std::min(n1, s); ++i) pts.push_back({i, s - i});
    if (pts.size() < 2) continue;
    std::vector<bool> edge(pts.size() - 1, false);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      // Pair {(i, j), (i+1, j-1)} crosses cell (i, j-1).
      edge[k] = gt.diag_at(pts[k].i, pts[k].j - 1) == Diag::Swne;
    }
    sweep_line(pts, edge, n1, anti_levels[group_of(n1 - s)]);
  }

  BicliqueCover cover;
  cover.ground_size = (n1 + 1) * (n2 + 1);
  for (auto* block : {&diag_levels, &anti_levels}) {
    for (int g = 0; g < 3; ++g) {
      BicliqueCover::Level& level = (*block)[g];
      if (level.a.empty() || level.b.empty()) continue;
      std::sort(level.a.begin(), level.a.end());
      std::sort(level.b.begin(), level.b.end());
      cover.levels.push_back(std::move(level));
    }
  }
  return cover;
}

namespace {

std::vector<std::pair<int, int>> grid_coords(int d1, int d2) {
  std::vector<std::pair<int, int>> coords((d1 + 1) * (d2 + 1));
  for (int j = 0; j <= d2; ++j) {
    for (int i = 0; i <= d1; ++i) coords[gridpoint_id(i, j, d1)] = {i, j};
  }
  return coords;
}

bool axis_method_supported(Sos2Method m) {
  return m == Sos2Method::Log || m == Sos2Method::LogIb || m == Sos2Method::Zzb ||
         m == Sos2Method::Zzi;
}

}  // namespace

FormulationFragment build_bivariate(const GridTriangulation& gt, Sos2Method method_x,
                                    Sos2Method method_y, const BicliqueCover& triangle_cover,
                                    bool cover_is_complete) {
  gt.validate();
  const int n1 = gt.d1();
  const int n2 = gt.d2();
  const int total = (n1 + 1) * (n2 + 1);

  TriangleFamily family = triangles(gt);
  std::vector<std::pair<int, int>> coords = grid_coords(n1, n2);
  CheckReport cover_check = check_biclique_representation(
      total, family, triangle_cover, /*relaxed=*/!cover_is_complete, &coords);
  if (!cover_check.pass) {
    throw Error(Errc::InvalidTriangleCover, "triangle cover invalid: " + cover_check.detail);
  }

  FormulationFragment frag = lambda_fragment(total);
  int aux_counter = 0;
  auto next_aux_name = [&]() { return "y_" + std::to_string(++aux_counter); };

  // Port an SOS2 fragment onto the aggregated weights of one axis.
  auto append_axis = [&](int axis, Sos2Method method) {
    const int d = axis == 1 ? n1 : n2;
    if (d < 2) return;  // aggregated SOS2 on a single segment is vacuous
    if (!axis_method_supported(method)) {
      throw Error(Errc::UnknownMethod,
                  std::string("unsupported axis SOS2 method: ") + std::string(method_name(method)));
    }
    FormulationFragment sub = build_sos2_fragment(method, d);
    const int base = frag.var_count();
    for (const FragVar& v : sub.aux_vars) {
      FragVar copy = v;
      copy.name = next_aux_name();
      frag.aux_vars.push_back(std::move(copy));
    }
    // Widen already-added rows to the new variable count.
    for (FragRow& row : frag.rows) {
      RatVec wide = frag.zero_row();
      wide.head(row.coeffs.size()) = row.coeffs;
      row.coeffs = std::move(wide);
    }
    for (const FragRow& row : sub.rows) {
      if (row.name == "convexity") continue;  // already present on the grid weights
      FragRow out;
      out.name = std::string(axis == 1 ? "x_" : "y_") + row.name;
      out.sense = row.sense;
      out.rhs = row.rhs;
      out.coeffs = frag.zero_row();
      for (int v = 0; v <= d; ++v) {
        const Rational& c = row.coeffs(v);
        if (c == 0) continue;
        for (int other = 0; other <= (axis == 1 ? n2 : n1); ++other) {
          int id = axis == 1 ? gridpoint_id(v, other, n1) : gridpoint_id(other, v, n1);
          out.coeffs(id) = c;
        }
      }
      for (int k = 0; k < static_cast<int>(sub.aux_vars.size()); ++k) {
        out.coeffs(base + k) = row.coeffs(sub.aux_offset() + k);
      }
      frag.rows.push_back(std::move(out));
    }
  };

  if (!cover_is_complete) {
    append_axis(1, method_x);
    append_axis(2, method_y);
  }

  // Independent-branching rows of the triangle cover in a fresh aux block.
  const int tri_base = frag.var_count();
  for (std::size_t k = 0; k < triangle_cover.levels.size(); ++k) {
    frag.aux_vars.push_back(FragVar{next_aux_name(), VarKind::Binary, 0, 1});
  }
  for (FragRow& row : frag.rows) {
    RatVec wide = frag.zero_row();
    wide.head(row.coeffs.size()) = row.coeffs;
    row.coeffs = std::move(wide);
  }
  for (std::size_t k = 0; k < triangle_cover.levels.size(); ++k) {
    FragRow ra;
    ra.name = "tri_a_" + std::to_string(k + 1);
    ra.coeffs = frag.zero_row();
    for (int v : triangle_cover.levels[k].a) ra.coeffs(v) = 1;
    ra.coeffs(tri_base + static_cast<int>(k)) = -1;
    frag.rows.push_back(std::move(ra));

    FragRow rb;
    rb.name = "tri_b_" + std::to_string(k + 1);
    rb.coeffs = frag.zero_row();
    for (int v : triangle_cover.levels[k].b) rb.coeffs(v) = 1;
    rb.coeffs(tri_base + static_cast<int>(k)) = 1;
    rb.rhs = 1;
    frag.rows.push_back(std::move(rb));
  }
  frag.pad_rows();
  return frag;
}

}  // namespace pwl
