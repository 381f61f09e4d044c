#pragma once

#include <cstdint>
#include <optional>

#include "pwl/bivariate.hpp"
#include "pwl/model.hpp"
#include "pwl/sos2.hpp"

namespace pwl {

// Deterministic 64-bit generator (splitmix64, stream scheme v1). Substreams
// are derived as splitmix64(seed ^ golden * (index + 1)) so per-arc draws are
// independent of arc order. Frozen per release: changing it changes every
// generated instance byte.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Uniform integer in [0, n) by rejection-free modulo (bias negligible and,
  // more importantly, deterministic across platforms).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

// Balanced transportation instance whose arc costs are concave nondecreasing
// univariate PWL functions with `segments` pieces (a power of two before the
// optional drop step, which removes log2(segments) - 1 interior breakpoints).
struct TransportInstance {
  int sources = 0;
  int sinks = 0;
  std::vector<Rational> supplies;
  std::vector<Rational> demands;
  std::vector<UnivariatePWL> arc_costs;  // row-major over (source, sink)
};

TransportInstance gen_transport_univariate(int sources, int sinks, int segments,
                                           std::uint64_t seed, bool drop);

Model transport_model(const TransportInstance& inst, Sos2Method method);

// Uniform random per-cell diagonal choice; values concave nondecreasing along
// both axes. force pins every cell to one orientation.
GridTriangulation gen_random_triangulation(int d1, int d2, std::uint64_t seed,
                                           std::optional<Diag> force = std::nullopt);

// Transportation instance with 25 bivariate cost terms: each term couples the
// flows of two arcs leaving the same source through a concave nondecreasing
// function on an N x N grid triangulation.
struct BivariateGridInstance {
  int sources = 0;
  int sinks = 0;
  std::vector<Rational> supplies;
  std::vector<Rational> demands;
  std::vector<GridTriangulation> term_grids;     // one per (source, sink)
  std::vector<std::pair<int, int>> term_arcs;    // arc index pair per term
};

BivariateGridInstance gen_bivariate_grid(int grid_size, std::uint64_t seed, bool drop);

Model bivariate_grid_model(const BivariateGridInstance& inst, Sos2Method method_x,
                           Sos2Method method_y);

}  // namespace pwl
