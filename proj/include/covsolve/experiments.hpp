#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "covsolve/exact.hpp"
#include "covsolve/instance.hpp"

namespace covsolve {

struct GenParams {
    int n = 0;
    double rho = 0.0;  // total edge density, split evenly between the families
    std::uint64_t seed = 0;
};

// Each edge of K_n (lexicographic i<j order) is kept with probability rho
// and routed to the forbidden or required family with probability 1/2 each;
// completion singletons are appended, then both families are shuffled.
// Deterministic per seed; always feasible.
Instance gen_random_instance(const GenParams& params);

// Fixed case-study instances, rows 1..5. Throws
// ValidationError(RowOutOfRange) otherwise.
Instance medical_instance(int row);

struct BenchMethods {
    bool greedy = true;
    bool heuristic = true;
    bool exact = false;
};

struct BenchRow {
    int n = 0;
    double rho = 0.0;
    int trials = 0;
    double mean_time_greedy = 0.0;     // seconds of thread CPU per solve
    double mean_time_heuristic = 0.0;  // seconds of thread CPU per solve
    double mean_pct_reduction = 0.0;   // 100*(s_greedy - s_heuristic)/s_greedy
    std::optional<double> mean_pct_over_optimal;  // 100*(s_heuristic - opt)/opt
    int exact_skipped = 0;  // trials whose exact solve ran out of budget
};

// params.seed is the master seed; trial t runs on an independent stream
// derived from it, so results are identical for any jobs count.
BenchRow bench(const GenParams& params, int trials, const BenchMethods& methods,
               const SolveLimits& budget = {}, int jobs = 1);

std::string bench_csv_header();
// with_times=false blanks the time columns for byte-stable output.
std::string bench_csv_row(const BenchRow& row, bool with_times = true);

}  // namespace covsolve
