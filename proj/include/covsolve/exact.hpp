#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covsolve/instance.hpp"

namespace covsolve {

struct SolveLimits {
    std::uint64_t max_nodes = 50'000'000;
    int max_k = AttrSet::max_universe;  // cap on the covering size considered
};

enum class Decision { Yes, No, BudgetExceeded };

struct DecideResult {
    Decision status = Decision::No;
    std::optional<Covering> cover;  // present when status == Yes
    std::uint64_t nodes_explored = 0;
};

struct OptimalReport {
    int optimal_size = 0;
    Covering one_cover;
    std::optional<std::vector<Covering>> canonical_optimal_covers;
    std::uint64_t nodes_explored = 0;
};

// Is there a covering with at most t fragments? Searches partitions of the
// required sets into admissible groups (restricted-growth symmetry
// breaking); complete because any covering shrinks to such a partition.
DecideResult decide_cover_exists(const Instance& inst, int t, const SolveLimits& limits = {});

// Smallest covering via iterative deepening from the combinatorial lower
// bound. Throws InfeasibleError when no covering exists and
// BudgetExceededError when limits are exhausted first. When enumerate_all is
// set, canonical_optimal_covers holds every optimal covering the partition
// search reaches, deduplicated as canonical families.
OptimalReport optimal_cover(const Instance& inst, const SolveLimits& limits = {},
                            bool enumerate_all = false);

std::vector<Covering> enumerate_optimal_covers(const Instance& inst,
                                               const SolveLimits& limits = {});

}  // namespace covsolve
