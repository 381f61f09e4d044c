#pragma once

#include <string>
#include <vector>

#include "pwl/polytope.hpp"
#include "pwl/rational.hpp"

namespace pwl {

enum class VarKind { Continuous, Binary, Integer };
enum class Sense { Le, Eq, Ge };

struct FragVar {
  std::string name;
  VarKind kind = VarKind::Continuous;
  Rational lb = 0;
  Rational ub = 1;
};

struct FragRow {
  std::string name;
  RatVec coeffs;  // over [lambda | extra | aux]
  Sense sense = Sense::Le;
  Rational rhs = 0;
};

// Constraint system over the weight simplex plus auxiliary variables. The
// lambda block always carries lambda >= 0 (variable bounds) and the
// convexity row sum(lambda) = 1.
struct FormulationFragment {
  int lambda_count = 0;
  std::vector<FragVar> extra_vars;  // continuous block (disaggregated weights)
  std::vector<FragVar> aux_vars;    // binary / general integer block
  std::vector<FragRow> rows;

  int extra_offset() const { return lambda_count; }
  int aux_offset() const { return lambda_count + static_cast<int>(extra_vars.size()); }
  int var_count() const { return aux_offset() + static_cast<int>(aux_vars.size()); }
  RatVec zero_row() const { return RatVec::Constant(var_count(), Rational(0)); }

  // Zero-extends rows created before later variable blocks were declared.
  void pad_rows();
};

// Fragment containing only the simplex over m weights.
FormulationFragment lambda_fragment(int m);

// LP relaxation as an H-polytope (integrality dropped, bounds materialized).
HPolytope relaxation_polytope(const FormulationFragment& frag);

// Polytope over (lambda, extras) obtained by fixing the aux block.
HPolytope face_polytope(const FormulationFragment& frag, const std::vector<Rational>& aux_values);

// Biclique cover {(A^k, B^k)} over ground elements 0..ground_size-1.
struct BicliqueCover {
  struct Level {
    std::vector<int> a;
    std::vector<int> b;
  };
  int ground_size = 0;
  std::vector<Level> levels;
};

void validate_cover_shape(const BicliqueCover& cover);

}  // namespace pwl
