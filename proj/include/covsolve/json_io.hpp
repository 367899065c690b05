#pragma once

#include <string>
#include <vector>

#include "covsolve/bounds.hpp"
#include "covsolve/exact.hpp"
#include "covsolve/greedy.hpp"
#include "covsolve/ideal.hpp"
#include "covsolve/instance.hpp"

namespace covsolve {

// Instance schema: {"n": int, "attribute_names": [string] (optional),
// "forbidden": [[int]], "required": [[int]]}; sets are sorted arrays.
// Malformed input raises ValidationError(BadInput) with a position or field
// diagnostic.
Instance instance_from_json(const std::string& text);
Instance load_instance_file(const std::string& path);
std::string instance_to_json(const Instance& inst);

std::string covering_to_json(const Covering& cov, const std::string& method,
                             const GreedyTrace* trace = nullptr);
std::string bounds_to_json(const BoundsReport& report);
std::string optimal_report_to_json(const OptimalReport& report);
std::string feasibility_to_json(const Instance& inst);
std::string algebraic_to_json(int optimal_size, const std::string& method);
std::string roots_to_json(const IdealGenerators& gens, const std::vector<Assignment>& roots,
                          bool include_generators);

}  // namespace covsolve
