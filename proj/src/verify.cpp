#include "pwl/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pwl {

namespace {

std::string pair_name(int u, int v, const std::vector<std::pair<int, int>>* coords) {
  auto one = [&](int x) {
    if (coords == nullptr) return std::to_string(x + 1);
    const auto& [i, j] = (*coords)[x];
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };
  return "{" + one(u) + "," + one(v) + "}";
}

}  // namespace

CheckReport check_biclique_representation(int ground_size,
                                          const std::vector<std::vector<int>>& family,
                                          const BicliqueCover& cover, bool relaxed,
                                          const std::vector<std::pair<int, int>>* coords) {
  CheckReport report;
  if (cover.ground_size != ground_size) {
    report.detail = "cover ground set size mismatch";
    return report;
  }
  try {
    validate_cover_shape(cover);
  } catch (const Error& e) {
    report.detail = e.what();
    return report;
  }
  if (relaxed && coords == nullptr) {
    report.detail = "relaxed mode requires ground coordinates";
    return report;
  }

  std::vector<std::set<int>> members(ground_size);
  for (std::size_t t = 0; t < family.size(); ++t) {
    for (int v : family[t]) members[v].insert(static_cast<int>(t));
  }
  auto co_member = [&](int u, int v) {
    for (int t : members[u]) {
      if (members[v].count(t) != 0) return true;
    }
    return false;
  };

  std::vector<std::vector<bool>> in_a(cover.levels.size(), std::vector<bool>(ground_size, false));
  std::vector<std::vector<bool>> in_b(cover.levels.size(), std::vector<bool>(ground_size, false));
  for (std::size_t k = 0; k < cover.levels.size(); ++k) {
    for (int v : cover.levels[k].a) in_a[k][v] = true;
    for (int v : cover.levels[k].b) in_b[k][v] = true;
  }
  auto separated = [&](int u, int v) {
    for (std::size_t k = 0; k < cover.levels.size(); ++k) {
      if ((in_a[k][u] && in_b[k][v]) || (in_a[k][v] && in_b[k][u])) return true;
    }
    return false;
  };

  for (int u = 0; u < ground_size; ++u) {
    for (int v = u + 1; v < ground_size; ++v) {
      bool sep = separated(u, v);
      bool co = co_member(u, v);
      if (sep && co) {
        report.detail = "separated pair lies in a common set: " + pair_name(u, v, coords);
        return report;
      }
      bool must_cover = !co;
      if (relaxed && must_cover) {
        int dx = std::abs((*coords)[u].first - (*coords)[v].first);
        int dy = std::abs((*coords)[u].second - (*coords)[v].second);
        must_cover = std::max(dx, dy) == 1;
      }
      if (must_cover && !sep) {
        report.detail = "uncovered pair: " + pair_name(u, v, coords);
        return report;
      }
    }
  }
  report.pass = true;
  report.detail = "levels=" + std::to_string(cover.levels.size());
  return report;
}

std::vector<RatVec> faces_by_code(const FormulationFragment& frag,
                                  const std::vector<Rational>& aux_values) {
  HPolytope poly = face_polytope(frag, aux_values);
  std::vector<RatVec> vertices;
  try {
    vertices = enumerate_vertices(poly);
  } catch (const Error& e) {
    if (e.code() == Errc::Empty) return {};
    throw;
  }

  std::vector<RatVec> lambda_points;
  lambda_points.reserve(vertices.size());
  for (const RatVec& v : vertices) lambda_points.push_back(v.head(frag.lambda_count));
  std::sort(lambda_points.begin(), lambda_points.end(), lex_less);
  lambda_points.erase(
      std::unique(lambda_points.begin(), lambda_points.end(),
                  [](const RatVec& a, const RatVec& b) { return compare(a, b) == 0; }),
      lambda_points.end());

  // The lambda-face is the projection; keep only its extreme points.
  if (lambda_points.size() > 1) {
    std::vector<RatVec> extreme;
    for (std::size_t i = 0; i < lambda_points.size(); ++i) {
      std::vector<RatVec> others;
      others.reserve(lambda_points.size() - 1);
      for (std::size_t j = 0; j < lambda_points.size(); ++j) {
        if (j != i) others.push_back(lambda_points[j]);
      }
      if (!point_in_hull(others, lambda_points[i])) extreme.push_back(lambda_points[i]);
    }
    lambda_points = std::move(extreme);
  }
  return lambda_points;
}

bool face_equals(const std::vector<RatVec>& face, int lambda_count,
                 const std::vector<int>& members) {
  if (face.size() != members.size()) return false;
  std::set<int> expected(members.begin(), members.end());
  for (const RatVec& v : face) {
    int support = -1;
    for (int i = 0; i < lambda_count; ++i) {
      if (v(i) == 1 && support < 0) {
        support = i;
      } else if (v(i) != 0) {
        return false;
      }
    }
    if (support < 0 || expected.erase(support) == 0) return false;
  }
  return expected.empty();
}

namespace {

std::string vec_string(const RatVec& v) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << rational_string(v(i));
  }
  out << ")";
  return out.str();
}

constexpr int kMaxVertexEnumerationVars = 40;

}  // namespace

CheckReport check_ideal(const FormulationFragment& frag) {
  if (frag.var_count() > kMaxVertexEnumerationVars) {
    throw Error(Errc::ScaleLimit, "relaxation too large for vertex enumeration");
  }
  CheckReport report;
  std::vector<RatVec> vertices = enumerate_vertices(relaxation_polytope(frag));
  const int aux0 = frag.aux_offset();
  for (const RatVec& v : vertices) {
    for (int k = 0; k < static_cast<int>(frag.aux_vars.size()); ++k) {
      if (!is_integral(v(aux0 + k))) {
        report.detail = "fractional vertex: " + vec_string(v);
        return report;
      }
    }
  }
  report.pass = true;
  report.detail = "vertices=" + std::to_string(vertices.size());
  return report;
}

CheckReport check_sharp_lambda(const FormulationFragment& frag) {
  if (frag.var_count() > kMaxVertexEnumerationVars) {
    throw Error(Errc::ScaleLimit, "relaxation too large for vertex enumeration");
  }
  CheckReport report;
  std::vector<RatVec> vertices = enumerate_vertices(relaxation_polytope(frag));
  for (int v = 0; v < frag.lambda_count; ++v) {
    bool found = false;
    for (const RatVec& vert : vertices) {
      bool matches = true;
      for (int i = 0; i < frag.lambda_count && matches; ++i) {
        matches = vert(i) == (i == v ? 1 : 0);
      }
      if (matches) {
        found = true;
        break;
      }
    }
    if (!found) {
      report.detail = "no relaxation vertex has lambda = e_" + std::to_string(v + 1);
      return report;
    }
  }
  report.pass = true;
  report.detail = "vertices=" + std::to_string(vertices.size());
  return report;
}

BranchMetrics branching_metrics(const UnivariatePWL& pwl, Sos2Method method,
                                const std::optional<BranchSpec>& branch) {
  pwl.validate();
  const int d = pwl.pieces();
  FormulationFragment frag = build_sos2_fragment(method, d);

  HPolytope poly = relaxation_polytope(frag);
  if (branch) {
    if (branch->aux_index < 0 || branch->aux_index >= static_cast<int>(frag.aux_vars.size())) {
      throw Error(Errc::DomainMismatch, "branch variable out of range");
    }
    RatVec row = RatVec::Constant(frag.var_count(), Rational(0));
    row(frag.aux_offset() + branch->aux_index) = branch->dir == Sense::Le ? 1 : -1;
    poly.add_inequality(std::move(row),
                        branch->dir == Sense::Le ? branch->bound : -branch->bound);
  }

  RatMat map = RatMat::Constant(2, frag.var_count(), Rational(0));
  for (int v = 0; v <= d; ++v) {
    map(0, v) = pwl.breakpoints[v];
    map(1, v) = pwl.values[v];
  }
  RatVec offset = RatVec::Constant(2, Rational(0));

  BranchMetrics metrics;
  Polygon2D branched;
  try {
    branched = project_to_plane(poly, map, offset);
  } catch (const Error& e) {
    if (e.code() != Errc::Empty) throw;
    metrics.volume = 0;
    metrics.proportion = 1;  // infeasible branch strengthens the bound everywhere
    return metrics;
  }
  metrics.polygon = branched;
  metrics.volume = polygon_area(branched);
  if (!branch) {
    metrics.proportion = 0;
    return metrics;
  }

  Polygon2D original = project_to_plane(relaxation_polytope(frag), map, offset);
  metrics.proportion = strengthened_proportion(original, branched, pwl.breakpoints.front(),
                                               pwl.breakpoints.back());
  return metrics;
}

std::vector<std::vector<Rational>> integer_aux_assignments(const FormulationFragment& frag) {
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> cursor;
  cursor.reserve(frag.aux_vars.size());
  for (const FragVar& v : frag.aux_vars) {
    if (!is_integral(v.lb) || !is_integral(v.ub)) {
      throw Error(Errc::DomainMismatch, "aux bounds must be integral");
    }
    cursor.push_back(v.lb);
  }
  if (frag.aux_vars.empty()) {
    out.push_back({});
    return out;
  }
  while (true) {
    out.push_back(cursor);
    std::size_t k = 0;
    while (k < cursor.size()) {
      cursor[k] += 1;
      if (cursor[k] <= frag.aux_vars[k].ub) break;
      cursor[k] = frag.aux_vars[k].lb;
      ++k;
    }
    if (k == cursor.size()) break;
  }
  return out;
}

CheckReport check_face_union(const FormulationFragment& frag,
                             const std::vector<std::vector<int>>& family) {
  CheckReport report;
  std::vector<std::set<int>> family_sets;
  family_sets.reserve(family.size());
  for (const auto& t : family) family_sets.emplace_back(t.begin(), t.end());

  std::vector<bool> family_hit(family.size(), false);
  for (const auto& code : integer_aux_assignments(frag)) {
    std::vector<RatVec> face = faces_by_code(frag, code);
    if (face.empty()) continue;

    std::set<int> support;
    for (const RatVec& v : face) {
      int unit = -1;
      for (int i = 0; i < frag.lambda_count; ++i) {
        if (v(i) == 1 && unit < 0) {
          unit = i;
        } else if (v(i) != 0) {
          unit = -2;
          break;
        }
      }
      if (unit < 0) {
        report.detail = "face vertex is not a unit vector";
        return report;
      }
      support.insert(unit);
    }

    bool inside = false;
    for (std::size_t t = 0; t < family_sets.size(); ++t) {
      if (std::includes(family_sets[t].begin(), family_sets[t].end(), support.begin(),
                        support.end())) {
        inside = true;
        if (family_sets[t] == support) family_hit[t] = true;
      }
    }
    if (!inside) {
      report.detail = "face support not contained in any family member";
      return report;
    }
  }
  for (std::size_t t = 0; t < family_hit.size(); ++t) {
    if (!family_hit[t]) {
      report.detail = "family member " + std::to_string(t + 1) + " is not a face";
      return report;
    }
  }
  report.pass = true;
  report.detail = "faces cover the family exactly";
  return report;
}

RedundantReport check_redundant_embedding(const FormulationFragment& frag,
                                          const std::vector<std::vector<int>>& family,
                                          const std::vector<std::vector<int>>& codes) {
  const int levels = static_cast<int>(frag.aux_vars.size());
  if (levels > 12) throw Error(Errc::ScaleLimit, "too many binary levels");
  for (const FragVar& v : frag.aux_vars) {
    if (v.kind != VarKind::Binary) {
      throw Error(Errc::DomainMismatch, "redundant-embedding check expects binary aux");
    }
  }

  RedundantReport report;
  std::vector<std::set<int>> family_sets;
  for (const auto& t : family) family_sets.emplace_back(t.begin(), t.end());

  const int total = 1 << levels;
  std::vector<std::vector<int>> supports(total);
  std::vector<bool> nonempty(total, false);
  for (int mask = 0; mask < total; ++mask) {
    std::vector<Rational> code(levels);
    RedundantFace entry;
    entry.code.resize(levels);
    for (int k = 0; k < levels; ++k) {
      code[k] = (mask >> k) & 1;
      entry.code[k] = code[k];
    }
    std::vector<RatVec> face = faces_by_code(frag, code);
    if (!face.empty()) {
      nonempty[mask] = true;
      entry.empty = false;
      std::set<int> support;
      for (const RatVec& v : face) {
        int unit = -1;
        for (int i = 0; i < frag.lambda_count; ++i) {
          if (v(i) == 1 && unit < 0) {
            unit = i;
          } else if (v(i) != 0) {
            report.detail = "face vertex is not a unit vector";
            return report;
          }
        }
        support.insert(unit);
      }
      entry.support.assign(support.begin(), support.end());
      supports[mask] = entry.support;

      bool inside = false;
      for (const auto& t : family_sets) {
        if (std::includes(t.begin(), t.end(), support.begin(), support.end())) {
          inside = true;
          break;
        }
      }
      if (!inside) {
        report.detail = "nonempty face not contained in any family member";
        return report;
      }
      std::vector<int> bits(levels);
      for (int k = 0; k < levels; ++k) bits[k] = (mask >> k) & 1;
      report.proj_y.push_back(std::move(bits));
    }
    report.faces.push_back(std::move(entry));
  }

  // Every designated code row must realize its family member exactly.
  if (codes.size() != family.size()) {
    report.detail = "one code row per family member required";
    return report;
  }
  for (std::size_t t = 0; t < family.size(); ++t) {
    if (static_cast<int>(codes[t].size()) != levels) {
      report.detail = "code row length mismatch";
      return report;
    }
    int mask = 0;
    for (int k = 0; k < levels; ++k) mask |= (codes[t][k] & 1) << k;
    std::set<int> expected(family[t].begin(), family[t].end());
    std::set<int> actual(supports[mask].begin(), supports[mask].end());
    if (!nonempty[mask] || expected != actual) {
      report.detail = "family member " + std::to_string(t + 1) + " is not the face of its code";
      return report;
    }
  }
  report.pass = true;
  report.detail = "proj_y size=" + std::to_string(report.proj_y.size());
  return report;
}

}  // namespace pwl
