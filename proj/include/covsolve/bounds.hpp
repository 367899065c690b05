#pragma once

#include "covsolve/instance.hpp"

namespace covsolve {

// All bounds are computed on the normalized instance.
struct BoundsReport {
    int lower = 0;
    int greedy_upper = 0;
    int heuristic_upper = 0;
    int refined_upper = 0;
    double probabilistic_size_bound = 0.0;
    double probabilistic_degree_bound = 0.0;
    int k = 0;
    int degF = 0;
    int degA = 0;
};

// Smallest possible covering size; 0 when there are no required sets,
// 1 when there are no forbidden sets. Throws InfeasibleError when no
// covering exists.
int covering_lower_bound(const Instance& inst);

BoundsReport bounds(const Instance& inst);

}  // namespace covsolve
