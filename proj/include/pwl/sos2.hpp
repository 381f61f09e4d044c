#pragma once

#include <optional>
#include <string_view>

#include "pwl/encodings.hpp"
#include "pwl/fragment.hpp"

namespace pwl {

// Continuous univariate PWL function through (t_v, f_v).
struct UnivariatePWL {
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;

  int pieces() const { return static_cast<int>(breakpoints.size()) - 1; }
  void validate() const;
  Rational piece_slope(int i) const;      // i in [0, pieces)
  Rational piece_intercept(int i) const;  // z = slope*x + intercept on piece i
};

enum class Sos2Method { Cc, Mc, Inc, DLog, Log, LogIb, Zzb, Zzi };

std::optional<Sos2Method> parse_method(std::string_view name);
std::string_view method_name(Sos2Method m);

// Convex combination formulation: linear in d, sharp but not ideal.
FormulationFragment build_cc(int d);

// Biclique cover behind the logarithmic independent branching formulation.
// Non-power-of-two d pads the segment range with virtual BRGC codes so that
// boundary breakpoints keep their untruncated incidences.
BicliqueCover build_logib_cover(int d);

// Independent branching rows for an arbitrary cover:
//   sum_{v in A^k} lambda_v <= y_k,  sum_{v in B^k} lambda_v <= 1 - y_k.
FormulationFragment assemble_ib(const BicliqueCover& cover, int lambda_count);

// Convex-hull description of the embedding of SOS2 under an arbitrary code in
// convex position: one two-sided row per hyperplane direction spanned by the
// consecutive code differences.
FormulationFragment build_embedding_sos2(int d, const CodeMatrix& code);

// Binary zig-zag formulation: integer zig-zag rows with the code variable
// block replaced through the unimodular inverse.
FormulationFragment build_zzb(int d);

// Disaggregated logarithmic formulation over per-piece weights.
FormulationFragment build_dlog(int d);

// Dispatch for the lambda-space methods (Cc, DLog, Log, LogIb, Zzb, Zzi).
FormulationFragment build_sos2_fragment(Sos2Method method, int d);

}  // namespace pwl
