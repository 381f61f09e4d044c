#pragma once

#include <string>
#include <vector>

#include "pwl/model.hpp"

namespace pwl {

// Deterministic writers: equal models produce byte-identical output.
// Coefficients whose reduced denominator is not of the form 2^a*5^b (or needs
// more than 18 fractional digits) are rounded to 17 significant digits and a
// warning is appended to the side channel.
std::string emit_lp(const Model& model, std::vector<std::string>* warnings = nullptr);
std::string emit_mps(const Model& model, std::vector<std::string>* warnings = nullptr);

}  // namespace pwl
