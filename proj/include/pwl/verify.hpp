#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pwl/fragment.hpp"
#include "pwl/polygon.hpp"
#include "pwl/sos2.hpp"

namespace pwl {

struct CheckReport {
  bool pass = false;
  std::string detail;  // witness on failure, summary on success
};

// Proposition-1 style validation of a biclique cover against a set family.
// Full mode demands: {u,v} separated by some level <=> {u,v} not jointly in
// any family member. Relaxed mode (triangle-selection covers) checks the
// "separated => not co-member" direction for all pairs but coverage only for
// pairs at Chebyshev distance one; coords supplies the (i, j) position of
// each ground element and may be null in full mode.
CheckReport check_biclique_representation(int ground_size,
                                          const std::vector<std::vector<int>>& family,
                                          const BicliqueCover& cover, bool relaxed = false,
                                          const std::vector<std::pair<int, int>>* coords = nullptr);

// Vertex set of the lambda-face obtained by fixing the aux block; empty
// result means the face is empty. Vertices are deduplicated projections onto
// the lambda block, restricted to extreme points, sorted lexicographically.
std::vector<RatVec> faces_by_code(const FormulationFragment& frag,
                                  const std::vector<Rational>& aux_values);

// True face set {e_v : v in members}?
bool face_equals(const std::vector<RatVec>& face, int lambda_count,
                 const std::vector<int>& members);

// Every vertex of the LP relaxation has integral aux coordinates.
CheckReport check_ideal(const FormulationFragment& frag);

// Every unit vector e_v appears as the lambda part of some relaxation vertex.
CheckReport check_sharp_lambda(const FormulationFragment& frag);

struct BranchSpec {
  int aux_index = 0;  // 0-based
  Sense dir = Sense::Le;
  Rational bound = 0;
};

struct BranchMetrics {
  Rational volume = 0;
  Rational proportion = 0;
  std::optional<Polygon2D> polygon;  // nullopt when the branch is infeasible
};

// Projects the (optionally branched) LP relaxation to (x, z) and reports the
// area and the strengthened proportion relative to the unbranched projection
// over [t_1, t_{d+1}].
BranchMetrics branching_metrics(const UnivariatePWL& pwl, Sos2Method method,
                                const std::optional<BranchSpec>& branch);

// Enumerates all integer aux assignments of the boxes in the fragment.
std::vector<std::vector<Rational>> integer_aux_assignments(const FormulationFragment& frag);

// Union-of-faces validity: every nonempty face is contained in some family
// member's face, and every family member is exactly some code's face.
CheckReport check_face_union(const FormulationFragment& frag,
                             const std::vector<std::vector<int>>& family);

struct RedundantFace {
  std::vector<Rational> code;
  std::vector<int> support;  // lambda indices of the face's unit vectors
  bool empty = true;
};

struct RedundantReport {
  bool pass = false;
  std::string detail;
  std::vector<RedundantFace> faces;      // one per binary code, in binary order
  std::vector<std::vector<int>> proj_y;  // codes with nonempty face, as 0/1 rows
};

// For an IB-style fragment with L binary aux variables: every nonempty face
// lies inside some member of the family, every family member appears as a
// face of its designated code row, and Proj_y is reported.
RedundantReport check_redundant_embedding(const FormulationFragment& frag,
                                          const std::vector<std::vector<int>>& family,
                                          const std::vector<std::vector<int>>& codes);

}  // namespace pwl
