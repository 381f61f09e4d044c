#pragma once

#include <array>
#include <vector>

#include "pwl/fragment.hpp"
#include "pwl/sos2.hpp"

namespace pwl {

enum class Diag {
  Swne,  // segment from (i, j) to (i+1, j+1)
  Senw,  // segment from (i+1, j) to (i, j+1)
};

// Rectangular grid with per-cell diagonal orientation and values at every
// gridpoint. Indices are 0-based internally; gridpoint (i, j) has
// 0 <= i <= d1, 0 <= j <= d2.
struct GridTriangulation {
  std::vector<Rational> xbreaks;  // d1 + 1
  std::vector<Rational> ybreaks;  // d2 + 1
  RatMat values;                  // (d1+1) x (d2+1), values(i, j)
  Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> diag;  // d1 x d2 of Diag

  int d1() const { return static_cast<int>(xbreaks.size()) - 1; }
  int d2() const { return static_cast<int>(ybreaks.size()) - 1; }
  Diag diag_at(int i, int j) const { return static_cast<Diag>(diag(i, j)); }
  void validate() const;
};

// Lambda index of gridpoint (i, j): y-major so the cell scan order matches
// the triangle family order below.
inline int gridpoint_id(int i, int j, int d1) { return j * (d1 + 1) + i; }

// Two triangles per cell, cells scanned with j outer and i inner. Each
// triangle is a sorted triple of gridpoint ids.
using TriangleFamily = std::vector<std::vector<int>>;
TriangleFamily triangles(const GridTriangulation& gt);

// Cartesian product of an axis SOS2 cover with the full index range of the
// other axis ("subrectangle selection"). axis is 1 or 2.
BicliqueCover aggregated_sos2_cover(int axis, const BicliqueCover& base, int d1, int d2);

// Triangle-selection cover from diagonal and anti-diagonal line sweeps,
// grouped by offset mod 3: at most 3 + 3 levels.
BicliqueCover six_stencil_cover(const GridTriangulation& gt);

// Intersection of the two aggregated SOS2 formulations (inline substitution,
// no extra variables) with the independent-branching rows of the triangle
// cover. Aux blocks are disjoint. When cover_is_complete, the cover is taken
// as the entire formulation (rectangle and triangle levels together).
FormulationFragment build_bivariate(const GridTriangulation& gt, Sos2Method method_x,
                                    Sos2Method method_y, const BicliqueCover& triangle_cover,
                                    bool cover_is_complete = false);

}  // namespace pwl
