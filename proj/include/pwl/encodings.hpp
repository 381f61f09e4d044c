#pragma once

#include <string>

#include "pwl/rational.hpp"

namespace pwl {

enum class CodeKind { Brgc, ZigzagInteger, ZigzagBinary, User };

// An encoding H with one row per disjunct. Rows are pairwise distinct; BRGC
// and binary zig-zag entries are 0/1.
struct CodeMatrix {
  CodeMat entries;  // d x r
  CodeKind kind = CodeKind::User;

  int d() const { return static_cast<int>(entries.rows()); }
  int r() const { return static_cast<int>(entries.cols()); }
};

// Binary reflected Gray code K^r (2^r rows), built by the reflect-and-extend
// recursion. 1 <= r <= 20.
CodeMatrix brgc(int r);

// Integer zig-zag C^r: entry (k, i) counts the value changes of column i of
// K^r over the first k rows. Cross-checked against the block recursion in
// debug builds.
CodeMatrix zigzag_integer(int r);

// Binary zig-zag Z^r: row-wise image of C^r under the unimodular map
// A(y)_i = y_i - sum_{k>i} y_k. Cross-checked against the block recursion in
// debug builds.
CodeMatrix zigzag_binary(int r);

// A and its inverse A^{-1}(y)_i = y_i + sum_{k>i} 2^{k-i-1} y_k.
CodeVec zigzag_transform(const CodeVec& y);
CodeVec zigzag_inverse(const CodeVec& y);

CodeMatrix truncate(const CodeMatrix& code, int d);

struct EncodingReport {
  bool distinct_rows = false;
  bool in_convex_position = false;
  bool lattice_empty = false;
  std::string witness;

  bool all() const { return distinct_rows && in_convex_position && lattice_empty; }
};

// Checks membership in the class of encodings usable by the embedding
// formulation: rows distinct, in convex position, and hull free of non-row
// lattice points. Supported up to r <= 6, d <= 64.
EncodingReport validate_encoding(const CodeMatrix& code);

inline int ceil_log2(int d) {
  int r = 0;
  while ((1 << r) < d) ++r;
  return r;
}

}  // namespace pwl
