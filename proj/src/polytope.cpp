#include "pwl/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "pwl/linalg.hpp"

namespace pwl {

namespace {

// Scale a rational vector to a primitive integer vector (shared denominator
// cleared, gcd of numerators divided out). Keeps double-description
// coefficients from growing without bound.
void normalize_primitive(RatVec& v) {
  Integer lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer den = v(i).get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  Integer gcd_num = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rational scaled = v(i) * Rational(lcm_den, 1);
    v(i) = scaled;
    Integer num = scaled.get_num();
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd_num > 1) {
    Rational inv(1, gcd_num);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) *= inv;
  }
}

// Tight-constraint bitset, sized for a fixed number of inserted halfspaces.
struct TightSet {
  std::vector<std::uint64_t> bits;

  explicit TightSet(std::size_t nbits) : bits((nbits + 63) / 64, 0) {}
  void set(std::size_t i) { bits[i / 64] |= std::uint64_t(1) << (i % 64); }
  void set_all_below(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) set(i);
  }
  static TightSet intersect(const TightSet& a, const TightSet& b) {
    TightSet out(a.bits.size() * 64);
    for (std::size_t w = 0; w < a.bits.size(); ++w) out.bits[w] = a.bits[w] & b.bits[w];
    return out;
  }
  bool contains(const TightSet& other) const {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      if ((other.bits[w] & ~bits[w]) != 0) return false;
    }
    return true;
  }
};

struct Ray {
  RatVec v;
  TightSet tight;
};

struct ConeGenerators {
  std::vector<RatVec> rays;
  std::vector<RatVec> lineality;
};

// Double description for the cone {x : rows[i] * x <= 0}. Lineality is
// tracked explicitly; ray adjacency uses the combinatorial tight-set test.
ConeGenerators dd_cone(const std::vector<RatVec>& rows, Eigen::Index dim) {
  const std::size_t m = rows.size();
  std::vector<RatVec> lineality;
  lineality.reserve(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    RatVec e = RatVec::Constant(dim, Rational(0));
    e(i) = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t idx = 0; idx < m; ++idx) {
    const RatVec& a = rows[idx];

    int cut = -1;
    for (std::size_t j = 0; j < lineality.size(); ++j) {
      if (a.dot(lineality[j]) != 0) {
        cut = static_cast<int>(j);
        break;
      }
    }

    if (cut >= 0) {
      RatVec l0 = lineality[static_cast<std::size_t>(cut)];
      Rational s0 = a.dot(l0);
      if (s0 > 0) {
        l0 = -l0;
        s0 = -s0;
      }
      std::vector<RatVec> next_lin;
      for (std::size_t j = 0; j < lineality.size(); ++j) {
        if (static_cast<int>(j) == cut) continue;
        RatVec l = lineality[j];
        Rational s = a.dot(l);
        if (s != 0) l -= (s / s0) * l0;
        normalize_primitive(l);
        next_lin.push_back(std::move(l));
      }
      lineality.swap(next_lin);
      for (Ray& r : rays) {
        Rational s = a.dot(r.v);
        if (s != 0) {
          r.v -= (s / s0) * l0;
          normalize_primitive(r.v);
        }
        r.tight.set(idx);
      }
      Ray r0{std::move(l0), TightSet(m)};
      r0.tight.set_all_below(idx);
      normalize_primitive(r0.v);
      rays.push_back(std::move(r0));
      continue;
    }

    // All lineality is parallel to the hyperplane; classic ray step.
    std::vector<Rational> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      s[j] = a.dot(rays[j].v);
      if (s[j] > 0) pos.push_back(j);
      else if (s[j] < 0) neg.push_back(j);
      else rays[j].tight.set(idx);
    }
    if (pos.empty()) continue;

    std::vector<Ray> fresh;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        TightSet common = TightSet::intersect(rays[p].tight, rays[n].tight);
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size(); ++k) {
          if (k == p || k == n) continue;
          if (rays[k].tight.contains(common)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray w{RatVec(s[p] * rays[n].v - s[n] * rays[p].v), common};
        normalize_primitive(w.v);
        w.tight.set(idx);
        fresh.push_back(std::move(w));
      }
    }

    std::vector<Ray> kept;
    kept.reserve(rays.size() - pos.size() + fresh.size());
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (s[j] <= 0) kept.push_back(std::move(rays[j]));
    }
    // Lineality cuts can make distinct rays coincide; drop duplicates.
    std::sort(fresh.begin(), fresh.end(),
              [](const Ray& x, const Ray& y) { return lex_less(x.v, y.v); });
    for (std::size_t j = 0; j < fresh.size(); ++j) {
      if (j > 0 && compare(fresh[j].v, fresh[j - 1].v) == 0) continue;
      bool dup = false;
      for (const Ray& r : kept) {
        if (compare(r.v, fresh[j].v) == 0) {
          dup = true;
          break;
        }
      }
      if (!dup) kept.push_back(std::move(fresh[j]));
    }
    rays.swap(kept);
    if (rays.empty() && lineality.empty()) break;
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  out.rays.reserve(rays.size());
  for (Ray& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

// Phase-1 simplex with Bland's rule: is {x >= 0 : A x = b} nonempty?
bool standard_form_feasible(RatMat a, RatVec b) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b(i) < 0) {
      a.row(i) = -a.row(i);
      b(i) = -b(i);
    }
  }
  // Tableau over original columns plus artificial identity.
  RatMat t(m, n + m);
  t.leftCols(n) = a;
  t.rightCols(m).setConstant(Rational(0));
  for (Eigen::Index i = 0; i < m; ++i) t(i, n + i) = 1;
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) basis[i] = n + i;

  auto objective = [&]() {
    Rational z = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (basis[i] >= n) z += b(i);
    }
    return z;
  };

  while (true) {
    // Reduced cost of column j: c_j - sum over artificial basics of t(i, j).
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      bool basic = false;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (basis[i] == j) {
          basic = true;
          break;
        }
      }
      if (basic) continue;
      Rational rc = j >= n ? Rational(1) : Rational(0);
      for (Eigen::Index i = 0; i < m; ++i) {
        if (basis[i] >= n) rc -= t(i, j);
      }
      if (rc < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    Rational best_ratio = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = b(i) / t(i, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) break;  // unbounded phase-1 cannot happen; defensive exit

    Rational piv = t(leave, enter);
    t.row(leave) /= piv;
    b(leave) /= piv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      Rational f = t(i, enter);
      t.row(i) -= f * t.row(leave);
      b(i) -= f * b(leave);
    }
    basis[leave] = enter;
  }
  return objective() == 0;
}

}  // namespace

std::vector<RatVec> enumerate_vertices(const HPolytope& p) {
  const Eigen::Index n = p.dim;

  // Eliminate the equality system: x = x0 + N u.
  RatVec x0 = RatVec::Constant(n, Rational(0));
  RatMat basis = RatMat::Identity(n, n);
  if (!p.equalities.empty()) {
    RatMat a(static_cast<Eigen::Index>(p.equalities.size()), n);
    RatVec b(static_cast<Eigen::Index>(p.equalities.size()));
    for (std::size_t i = 0; i < p.equalities.size(); ++i) {
      a.row(static_cast<Eigen::Index>(i)) = p.equalities[i].first.transpose();
      b(static_cast<Eigen::Index>(i)) = p.equalities[i].second;
    }
    auto sol = solve_linear<Rational>(a, b);
    if (!sol) throw Error(Errc::Empty, "equality system inconsistent");
    x0 = *sol;
    basis = nullspace<Rational>(a);
  }
  const Eigen::Index k = basis.cols();

  if (k == 0) {
    for (const auto& [a, b] : p.inequalities) {
      if (a.dot(x0) > b) throw Error(Errc::Empty, "infeasible point polytope");
    }
    return {x0};
  }

  // Homogenize: rows over (t, u), feasible side row * y <= 0; t >= 0 first.
  std::vector<RatVec> rows;
  rows.reserve(p.inequalities.size() + 1);
  {
    RatVec tpos = RatVec::Constant(k + 1, Rational(0));
    tpos(0) = -1;
    rows.push_back(std::move(tpos));
  }
  for (const auto& [a, b] : p.inequalities) {
    RatVec reduced = basis.transpose() * a;
    Rational rhs = b - a.dot(x0);
    bool zero = true;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (reduced(i) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      if (rhs < 0) throw Error(Errc::Empty, "inconsistent constant constraint");
      continue;
    }
    RatVec row(k + 1);
    row(0) = -rhs;
    row.tail(k) = reduced;
    normalize_primitive(row);
    rows.push_back(std::move(row));
  }

  ConeGenerators gen = dd_cone(rows, k + 1);
  if (!gen.lineality.empty()) {
    throw Error(Errc::Unbounded, "polytope has a lineality direction");
  }

  std::vector<RatVec> vertices;
  for (const RatVec& r : gen.rays) {
    const Rational& t = r(0);
    if (t == 0) {
      throw Error(Errc::Unbounded, "polytope has a recession direction");
    }
    assert(t > 0);
    RatVec u = r.tail(k) / t;
    vertices.push_back(x0 + basis * u);
  }
  if (vertices.empty()) throw Error(Errc::Empty, "no feasible point");

  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end(),
                             [](const RatVec& a, const RatVec& b) { return compare(a, b) == 0; }),
                 vertices.end());
  return vertices;
}

bool point_in_hull(const std::vector<RatVec>& points, const RatVec& p) {
  if (points.empty()) return false;
  const Eigen::Index d = points.front().size();
  for (const RatVec& q : points) {
    if (q.size() != d) throw Error(Errc::DimensionMismatch, "inconsistent point dimensions");
  }
  if (p.size() != d) throw Error(Errc::DimensionMismatch, "query point dimension mismatch");

  RatMat a(d + 1, static_cast<Eigen::Index>(points.size()));
  RatVec b(d + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (Eigen::Index i = 0; i < d; ++i) a(i, static_cast<Eigen::Index>(j)) = points[j](i);
    a(d, static_cast<Eigen::Index>(j)) = 1;
  }
  for (Eigen::Index i = 0; i < d; ++i) b(i) = p(i);
  b(d) = 1;
  return standard_form_feasible(std::move(a), std::move(b));
}

bool HullFacets::contains(const RatVec& x) const {
  for (const auto& [a, b] : equalities) {
    if (a.dot(x) != b) return false;
  }
  for (const auto& [a, b] : lower_bounds) {
    if (a.dot(x) < b) return false;
  }
  return true;
}

HullFacets hull_facets(const std::vector<RatVec>& points) {
  if (points.empty()) throw Error(Errc::Empty, "hull of no points");
  const Eigen::Index d = points.front().size();

  // Valid inequalities b0 + b*x >= 0 form the cone {(b0,b) : b0 + b*p_i >= 0}.
  std::vector<RatVec> rows;
  rows.reserve(points.size());
  for (const RatVec& p : points) {
    if (p.size() != d) throw Error(Errc::DimensionMismatch, "inconsistent point dimensions");
    RatVec row(d + 1);
    row(0) = -1;
    for (Eigen::Index i = 0; i < d; ++i) row(i + 1) = -p(i);
    rows.push_back(std::move(row));
  }
  ConeGenerators gen = dd_cone(rows, d + 1);

  HullFacets out;
  out.dim = d;
  auto nonzero = [](const RatVec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) != 0) return true;
    }
    return false;
  };
  for (const RatVec& r : gen.rays) {
    RatVec a = r.tail(d);
    if (!nonzero(a)) continue;  // the trivial inequality 1 >= 0
    out.lower_bounds.emplace_back(std::move(a), Rational(-r(0)));
  }
  for (const RatVec& l : gen.lineality) {
    RatVec a = l.tail(d);
    if (!nonzero(a)) continue;
    out.equalities.emplace_back(std::move(a), Rational(-l(0)));
  }
  return out;
}

}  // namespace pwl
