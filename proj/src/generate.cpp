#include "pwl/generate.hpp"

#include <algorithm>

#include "pwl/pwl_api.hpp"

namespace pwl {

std::uint64_t SplitMix64::next() {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

template <typename M>
void remove_row(M& m, int row) {
  M out(m.rows() - 1, m.cols());
  out.topRows(row) = m.topRows(row);
  out.bottomRows(m.rows() - 1 - row) = m.bottomRows(m.rows() - 1 - row);
  m = std::move(out);
}

template <typename M>
void remove_col(M& m, int col) {
  M out(m.rows(), m.cols() - 1);
  out.leftCols(col) = m.leftCols(col);
  out.rightCols(m.cols() - 1 - col) = m.rightCols(m.cols() - 1 - col);
  m = std::move(out);
}

// Concave nondecreasing PWL on [0, cap] with `segments` pieces: strictly
// decreasing positive slopes drawn per segment.
UnivariatePWL random_concave_pwl(SplitMix64& rng, const Rational& cap, int segments) {
  std::vector<std::uint64_t> raw(segments);
  for (auto& r : raw) r = rng.below(1000);
  std::sort(raw.begin(), raw.end(), std::greater<>());
  UnivariatePWL pwl;
  pwl.breakpoints.push_back(0);
  pwl.values.push_back(0);
  for (int k = 1; k <= segments; ++k) {
    pwl.breakpoints.push_back(cap * Rational(k, segments));
  }
  for (int k = 0; k < segments; ++k) {
    // Strict decrease via the tie-break term; denominator keeps slopes small.
    Rational slope(static_cast<long>(raw[k] * segments + (segments - k)),
                   static_cast<long>(100 * segments));
    Rational dx = pwl.breakpoints[k + 1] - pwl.breakpoints[k];
    pwl.values.push_back(pwl.values.back() + slope * dx);
  }
  return pwl;
}

void drop_interior_breakpoints(UnivariatePWL& pwl, SplitMix64& rng, int count) {
  for (int step = 0; step < count; ++step) {
    int interior = static_cast<int>(pwl.breakpoints.size()) - 2;
    if (interior <= 0) break;
    int pick = 1 + static_cast<int>(rng.below(interior));
    pwl.breakpoints.erase(pwl.breakpoints.begin() + pick);
    pwl.values.erase(pwl.values.begin() + pick);
  }
}

std::vector<Rational> balanced_split(SplitMix64& rng, int parts, long total) {
  // Random positive integers rescaled to sum exactly to `total`.
  std::vector<long> raw(parts);
  long raw_sum = 0;
  for (auto& r : raw) {
    r = 1 + static_cast<long>(rng.below(40));
    raw_sum += r;
  }
  std::vector<Rational> out(parts);
  long assigned = 0;
  for (int i = 0; i < parts; ++i) {
    long share = i + 1 == parts ? total - assigned : std::max(1L, total * raw[i] / raw_sum);
    assigned += share;
    out[i] = share;
  }
  return out;
}

}  // namespace

TransportInstance gen_transport_univariate(int sources, int sinks, int segments,
                                           std::uint64_t seed, bool drop) {
  if (sources < 1 || sinks < 1) throw Error(Errc::DomainMismatch, "need sources*sinks >= 1");
  if (segments < 2 || !is_power_of_two(segments)) {
    throw Error(Errc::DomainMismatch, "segments must be a power of two >= 2");
  }

  TransportInstance inst;
  inst.sources = sources;
  inst.sinks = sinks;

  SplitMix64 balance = substream(seed, 0);
  long total = 0;
  inst.supplies.resize(sources);
  for (int i = 0; i < sources; ++i) {
    long s = 10 + static_cast<long>(balance.below(41));
    inst.supplies[i] = s;
    total += s;
  }
  inst.demands = balanced_split(balance, sinks, total);

  const int drop_count = drop ? ceil_log2(segments) - 1 : 0;
  for (int i = 0; i < sources; ++i) {
    for (int j = 0; j < sinks; ++j) {
      SplitMix64 arc = substream(seed, 1 + static_cast<std::uint64_t>(i) * sinks + j);
      Rational cap = std::min(inst.supplies[i], inst.demands[j]);
      UnivariatePWL pwl = random_concave_pwl(arc, cap, segments);
      if (drop_count > 0) drop_interior_breakpoints(pwl, arc, drop_count);
      inst.arc_costs.push_back(std::move(pwl));
    }
  }
  return inst;
}

Model transport_model(const TransportInstance& inst, Sos2Method method) {
  Model model;
  std::vector<int> flow(inst.arc_costs.size());
  for (int i = 0; i < inst.sources; ++i) {
    for (int j = 0; j < inst.sinks; ++j) {
      int a = i * inst.sinks + j;
      flow[a] = model.add_variable("x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                                   VarKind::Continuous, Rational(0),
                                   inst.arc_costs[a].breakpoints.back());
    }
  }
  for (int i = 0; i < inst.sources; ++i) {
    LinExpr row;
    for (int j = 0; j < inst.sinks; ++j) row.add(flow[i * inst.sinks + j], 1);
    model.add_constraint("supply_" + std::to_string(i + 1), std::move(row), Sense::Eq,
                         inst.supplies[i]);
  }
  for (int j = 0; j < inst.sinks; ++j) {
    LinExpr row;
    for (int i = 0; i < inst.sources; ++i) row.add(flow[i * inst.sinks + j], 1);
    model.add_constraint("demand_" + std::to_string(j + 1), std::move(row), Sense::Eq,
                         inst.demands[j]);
  }
  for (std::size_t a = 0; a < inst.arc_costs.size(); ++a) {
    std::string prefix = "c" + std::to_string(a + 1) + "_";
    int z = add_univariate_pwl(model, flow[a], inst.arc_costs[a], method, prefix);
    model.objective.add(z, 1);
  }
  model.objective.compact();
  return model;
}

GridTriangulation gen_random_triangulation(int d1, int d2, std::uint64_t seed,
                                           std::optional<Diag> force) {
  if (d1 < 1 || d2 < 1) throw Error(Errc::DomainMismatch, "grid needs at least one cell per axis");
  GridTriangulation gt;
  for (int i = 0; i <= d1; ++i) gt.xbreaks.push_back(i);
  for (int j = 0; j <= d2; ++j) gt.ybreaks.push_back(j);

  SplitMix64 rng = substream(seed, 0);
  // Concave nondecreasing profile per axis from decreasing increments.
  std::vector<Rational> gx(d1 + 1), gy(d2 + 1);
  gx[0] = 0;
  for (int i = 1; i <= d1; ++i) {
    gx[i] = gx[i - 1] + Rational(static_cast<long>(rng.below(50) + 1) + 50L * (d1 - i), 10);
  }
  gy[0] = 0;
  for (int j = 1; j <= d2; ++j) {
    gy[j] = gy[j - 1] + Rational(static_cast<long>(rng.below(50) + 1) + 50L * (d2 - j), 10);
  }
  gt.values.resize(d1 + 1, d2 + 1);
  for (int i = 0; i <= d1; ++i) {
    for (int j = 0; j <= d2; ++j) gt.values(i, j) = gx[i] + gy[j];
  }

  gt.diag.resize(d1, d2);
  SplitMix64 diags = substream(seed, 1);
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d2; ++j) {
      Diag pick = force ? *force : (diags.below(2) == 0 ? Diag::Swne : Diag::Senw);
      gt.diag(i, j) = static_cast<int>(pick);
    }
  }
  return gt;
}

BivariateGridInstance gen_bivariate_grid(int grid_size, std::uint64_t seed, bool drop) {
  if (grid_size < 2 || !is_power_of_two(grid_size)) {
    throw Error(Errc::DomainMismatch, "grid size must be a power of two >= 2");
  }
  BivariateGridInstance inst;
  inst.sources = 5;
  inst.sinks = 5;

  SplitMix64 balance = substream(seed, 0);
  long total = 0;
  inst.supplies.resize(inst.sources);
  for (int i = 0; i < inst.sources; ++i) {
    long s = 10 + static_cast<long>(balance.below(41));
    inst.supplies[i] = s;
    total += s;
  }
  inst.demands = balanced_split(balance, inst.sinks, total);

  const int drop_count = drop ? ceil_log2(grid_size) - 1 : 0;
  for (int i = 0; i < inst.sources; ++i) {
    for (int j = 0; j < inst.sinks; ++j) {
      int term = i * inst.sinks + j;
      // Each term couples arc (i, j) with the next arc from the same source.
      int partner = i * inst.sinks + (j + 1) % inst.sinks;
      inst.term_arcs.emplace_back(term, partner);

      GridTriangulation gt =
          gen_random_triangulation(grid_size, grid_size, seed ^ (term + 1), std::nullopt);
      Rational cap1 = std::min(inst.supplies[i], inst.demands[j]);
      Rational cap2 = std::min(inst.supplies[i], inst.demands[(j + 1) % inst.sinks]);
      for (int k = 0; k <= grid_size; ++k) {
        gt.xbreaks[k] = cap1 * Rational(k, grid_size);
        gt.ybreaks[k] = cap2 * Rational(k, grid_size);
      }
      if (drop_count > 0) {
        SplitMix64 dropper = substream(seed ^ (term + 1), 2);
        for (int step = 0; step < drop_count; ++step) {
          int interior = static_cast<int>(gt.xbreaks.size()) - 2;
          if (interior <= 0) break;
          int pick = 1 + static_cast<int>(dropper.below(interior));
          gt.xbreaks.erase(gt.xbreaks.begin() + pick);
          remove_row(gt.values, pick);
          remove_row(gt.diag, pick);
          interior = static_cast<int>(gt.ybreaks.size()) - 2;
          pick = 1 + static_cast<int>(dropper.below(interior));
          gt.ybreaks.erase(gt.ybreaks.begin() + pick);
          remove_col(gt.values, pick);
          remove_col(gt.diag, pick);
        }
      }
      inst.term_grids.push_back(std::move(gt));
    }
  }
  return inst;
}

Model bivariate_grid_model(const BivariateGridInstance& inst, Sos2Method method_x,
                           Sos2Method method_y) {
  Model model;
  std::vector<int> flow(inst.sources * inst.sinks);
  for (int i = 0; i < inst.sources; ++i) {
    for (int j = 0; j < inst.sinks; ++j) {
      int a = i * inst.sinks + j;
      flow[a] = model.add_variable("x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                                   VarKind::Continuous, Rational(0),
                                   std::min(inst.supplies[i], inst.demands[j]));
    }
  }
  for (int i = 0; i < inst.sources; ++i) {
    LinExpr row;
    for (int j = 0; j < inst.sinks; ++j) row.add(flow[i * inst.sinks + j], 1);
    model.add_constraint("supply_" + std::to_string(i + 1), std::move(row), Sense::Eq,
                         inst.supplies[i]);
  }
  for (int j = 0; j < inst.sinks; ++j) {
    LinExpr row;
    for (int i = 0; i < inst.sources; ++i) row.add(flow[i * inst.sinks + j], 1);
    model.add_constraint("demand_" + std::to_string(j + 1), std::move(row), Sense::Eq,
                         inst.demands[j]);
  }
  for (std::size_t t = 0; t < inst.term_grids.size(); ++t) {
    std::string prefix = "c" + std::to_string(t + 1) + "_";
    int z = add_bivariate_pwl(model, flow[inst.term_arcs[t].first], flow[inst.term_arcs[t].second],
                              inst.term_grids[t], method_x, method_y, prefix);
    model.objective.add(z, 1);
  }
  model.objective.compact();
  return model;
}

}  // namespace pwl
