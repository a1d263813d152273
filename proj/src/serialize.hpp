#pragma once

#include <string>

#include "lie_algebra.hpp"

namespace dern {

struct MetricTwoStep;  // htype.hpp

// Round trips are bit-exact: parsing the emitted string reproduces the value,
// and re-emitting reproduces the bytes.
std::string algebra_to_json(const LieAlgebra& g);
AlgebraPtr algebra_from_json(const std::string& text);

std::string metric_two_step_to_json(const MetricTwoStep& m);
MetricTwoStep metric_two_step_from_json(const std::string& text);

}  // namespace dern
