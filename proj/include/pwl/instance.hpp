#pragma once

#include <string>

#include "pwl/bivariate.hpp"
#include "pwl/sos2.hpp"

namespace pwl {

// JSON instance: numeric values are exact decimal strings (or integer
// literals); binary floating point never enters the pipeline.
//
// {"type": "univariate", "breakpoints": ["0", ...], "values": ["0", ...]}
// {"type": "bivariate", "xbreaks": [...], "ybreaks": [...],
//  "values": [[...], ...],          // values[i][j], i over x
//  "diagonals": [[...], ...]}       // d1 x d2 of "swne" / "senw"
struct PWLInstance {
  enum class Type { Univariate, Bivariate } type = Type::Univariate;
  UnivariatePWL univariate;
  GridTriangulation bivariate;
};

PWLInstance parse_instance(const std::string& json_text);
std::string instance_to_json(const PWLInstance& inst);

}  // namespace pwl
