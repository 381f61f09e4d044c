#include "pwl/encodings.hpp"

#include <cassert>
#include <cstdlib>
#include <set>
#include <vector>

#include "pwl/polytope.hpp"

namespace pwl {

namespace {

void check_r(int r) {
  if (r < 1 || r > 20) throw Error(Errc::ROutOfRange, "code length r must be in [1, 20]");
}

CodeMat brgc_entries(int r) {
  CodeMat k(2, 1);
  k << 0, 1;
  for (int level = 1; level < r; ++level) {
    const int rows = static_cast<int>(k.rows());
    CodeMat next(2 * rows, level + 1);
    next.block(0, 0, rows, level) = k;
    for (int i = 0; i < rows; ++i) next.block(rows, 0, rows, level).row(i) = k.row(rows - 1 - i);
    next.col(level).head(rows).setZero();
    next.col(level).tail(rows).setOnes();
    k = std::move(next);
  }
  return k;
}

CodeMat zigzag_integer_recursion(int r) {
  CodeMat c(2, 1);
  c << 0, 1;
  for (int level = 1; level < r; ++level) {
    const int rows = static_cast<int>(c.rows());
    CodeMat next(2 * rows, level + 1);
    next.block(0, 0, rows, level) = c;
    for (int i = 0; i < rows; ++i) {
      next.block(rows, 0, rows, level).row(i) = c.row(i) + c.row(rows - 1);
    }
    next.col(level).head(rows).setZero();
    next.col(level).tail(rows).setOnes();
    c = std::move(next);
  }
  return c;
}

CodeMat zigzag_binary_recursion(int r) {
  CodeMat z(2, 1);
  z << 0, 1;
  for (int level = 1; level < r; ++level) {
    const int rows = static_cast<int>(z.rows());
    CodeMat next(2 * rows, level + 1);
    next.block(0, 0, rows, level) = z;
    next.block(rows, 0, rows, level) = z;
    next.col(level).head(rows).setZero();
    next.col(level).tail(rows).setOnes();
    z = std::move(next);
  }
  return z;
}

}  // namespace

CodeMatrix brgc(int r) {
  check_r(r);
  return CodeMatrix{brgc_entries(r), CodeKind::Brgc};
}

CodeMatrix zigzag_integer(int r) {
  check_r(r);
  CodeMat k = brgc_entries(r);
  CodeMat c(k.rows(), k.cols());
  for (int i = 0; i < k.cols(); ++i) {
    c(0, i) = 0;
    for (int row = 1; row < k.rows(); ++row) {
      c(row, i) = c(row - 1, i) + std::abs(k(row, i) - k(row - 1, i));
    }
  }
  assert(c == zigzag_integer_recursion(r));
  return CodeMatrix{std::move(c), CodeKind::ZigzagInteger};
}

CodeMatrix zigzag_binary(int r) {
  check_r(r);
  CodeMat c = zigzag_integer(r).entries;
  CodeMat z(c.rows(), c.cols());
  for (int row = 0; row < c.rows(); ++row) {
    CodeVec y(c.cols());
    for (int i = 0; i < c.cols(); ++i) y(i) = c(row, i);
    CodeVec t = zigzag_transform(y);
    for (int i = 0; i < c.cols(); ++i) z(row, i) = static_cast<int>(t(i));
  }
  assert(z == zigzag_binary_recursion(r));
  return CodeMatrix{std::move(z), CodeKind::ZigzagBinary};
}

CodeVec zigzag_transform(const CodeVec& y) {
  const int r = static_cast<int>(y.size());
  CodeVec out(r);
  for (int i = 0; i < r; ++i) {
    std::int64_t tail = 0;
    for (int k = i + 1; k < r; ++k) tail += y(k);
    out(i) = y(i) - tail;
  }
  return out;
}

CodeVec zigzag_inverse(const CodeVec& y) {
  const int r = static_cast<int>(y.size());
  CodeVec out(r);
  for (int i = 0; i < r; ++i) {
    std::int64_t acc = y(i);
    for (int k = i + 1; k < r; ++k) acc += (std::int64_t(1) << (k - i - 1)) * y(k);
    out(i) = acc;
  }
  return out;
}

CodeMatrix truncate(const CodeMatrix& code, int d) {
  if (d > code.d()) throw Error(Errc::DTooLarge, "cannot truncate beyond code length");
  CodeMatrix out;
  out.entries = code.entries.topRows(d);
  out.kind = code.kind;
  return out;
}

EncodingReport validate_encoding(const CodeMatrix& code) {
  const int d = code.d();
  const int r = code.r();
  if (r > 6 || d > 64) {
    throw Error(Errc::ScaleLimit, "encoding validation supports r <= 6, d <= 64");
  }

  EncodingReport report;
  std::set<std::vector<int>> rows;
  for (int i = 0; i < d; ++i) {
    std::vector<int> row(r);
    for (int j = 0; j < r; ++j) row[j] = code.entries(i, j);
    rows.insert(std::move(row));
  }
  report.distinct_rows = static_cast<int>(rows.size()) == d;

  std::vector<RatVec> points;
  points.reserve(d);
  for (int i = 0; i < d; ++i) {
    RatVec p(r);
    for (int j = 0; j < r; ++j) p(j) = code.entries(i, j);
    points.push_back(std::move(p));
  }

  report.in_convex_position = true;
  for (int i = 0; i < d && report.in_convex_position; ++i) {
    std::vector<RatVec> others;
    others.reserve(d - 1);
    for (int j = 0; j < d; ++j) {
      if (j != i) others.push_back(points[j]);
    }
    if (!others.empty() && point_in_hull(others, points[i])) {
      report.in_convex_position = false;
      report.witness = "row " + std::to_string(i + 1) + " lies in the hull of the others";
    }
  }

  // Every lattice point of the bounding box inside the hull must be a row.
  HullFacets facets = hull_facets(points);
  std::vector<int> lo(r), hi(r);
  long long box = 1;
  for (int j = 0; j < r; ++j) {
    lo[j] = hi[j] = code.entries(0, j);
    for (int i = 1; i < d; ++i) {
      lo[j] = std::min(lo[j], code.entries(i, j));
      hi[j] = std::max(hi[j], code.entries(i, j));
    }
    box *= hi[j] - lo[j] + 1;
    if (box > (1 << 21)) {
      throw Error(Errc::ScaleLimit, "lattice test bounding box too large");
    }
  }
  report.lattice_empty = true;
  std::vector<int> cursor = lo;
  while (true) {
    RatVec p(r);
    std::vector<int> key(r);
    for (int j = 0; j < r; ++j) {
      p(j) = cursor[j];
      key[j] = cursor[j];
    }
    if (facets.contains(p) && rows.find(key) == rows.end()) {
      report.lattice_empty = false;
      report.witness = "interior lattice point is not a code row";
      break;
    }
    int j = 0;
    while (j < r && ++cursor[j] > hi[j]) {
      cursor[j] = lo[j];
      ++j;
    }
    if (j == r) break;
  }
  return report;
}

}  // namespace pwl
