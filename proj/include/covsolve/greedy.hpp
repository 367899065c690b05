#pragma once

#include <vector>

#include "covsolve/instance.hpp"

namespace covsolve {

enum class GreedyAction { Merged, AlreadyContained, AppendedNew };

struct GreedyStep {
    int required_index = 0;  // position in the processed required order
    GreedyAction action = GreedyAction::AppendedNew;
    int fragment = -1;  // target fragment index when action == Merged
    friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;  // one entry per required set, in processing order
    friend bool operator==(const GreedyTrace&, const GreedyTrace&) = default;
};

struct GreedyResult {
    Covering cover;
    GreedyTrace trace;
};

// Single pass over the required sets of the normalized instance, in stored
// order: a set already inside a fragment is skipped, otherwise it is merged
// into the lowest-index fragment whose union with it contains no forbidden
// set, otherwise it starts a new fragment. Throws InfeasibleError when no
// covering exists.
GreedyResult greedy_cover(const Instance& inst);

// Same pass after stable-sorting the required sets by decreasing number of
// intersecting forbidden sets.
GreedyResult heuristic_cover(const Instance& inst);

// The required sets of the normalized instance in the order heuristic_cover
// processes them.
SetFamily heuristic_order(const Instance& inst);

// Checks the size bound |C| <= k*deg(F)*deg(A)+1 and the per-element bound
// deg_v(C) <= deg_v(A), both on the normalized instance.
bool verify_theorem9(const Instance& inst, const Covering& cov);

}  // namespace covsolve
