#pragma once

#include "pwl/bivariate.hpp"
#include "pwl/model.hpp"
#include "pwl/sos2.hpp"

namespace pwl {

// Adds z constrained to the graph of the univariate PWL function of x_var,
// using the requested formulation. Lambda-space methods add weight variables
// and the two linking rows; mc/inc add their native variable blocks. A single
// piece degenerates to one affine row with no auxiliary variables. Variable
// names are prefixed for uniqueness across multiple calls.
int add_univariate_pwl(Model& model, int x_var, const UnivariatePWL& pwl, Sos2Method method,
                       const std::string& prefix = "");

// Bivariate counterpart over a grid triangulation: grid weights, three
// linking rows, aggregated SOS2 formulations per axis, and the 6-stencil
// triangle selection.
int add_bivariate_pwl(Model& model, int x1_var, int x2_var, const GridTriangulation& gt,
                      Sos2Method method_x, Sos2Method method_y, const std::string& prefix = "");

// Standalone multiple-choice and incremental formulations in their native
// variable spaces, with x and z created in a fresh model.
Model build_mc(const UnivariatePWL& pwl);
Model build_inc(const UnivariatePWL& pwl);

}  // namespace pwl
