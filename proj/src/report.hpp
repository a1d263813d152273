#pragma once

#include <cstdint>
#include <string>

#include "lie_algebra.hpp"

namespace dern {

// JSON documents for the library surface. Layout is fixed: "tool", the
// identification block, the payload, then "timings". Everything except the
// timing values is deterministic for a given input.
extern const char* const tool_version;

std::string roots_report(const AlgebraPtr& g);

// mode is one of "all", "grading", "rootspace".
std::string solve_report(const AlgebraPtr& g, const std::string& mode);

std::string verify_report(const AlgebraPtr& g);

// Input is a dern-two-step document; the seed drives the sampled bilinear
// extension of the basis-pair Clifford check.
std::string htype_report(const std::string& two_step_json, uint64_t seed);

}  // namespace dern
