#include "covsolve/experiments.hpp"

#include <atomic>
#include <cstdio>
#include <ctime>
#include <random>
#include <thread>
#include <vector>

#include "covsolve/greedy.hpp"

namespace covsolve {

namespace {

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Fisher-Yates with a plain modulo draw: bias is irrelevant here and the
// result does not depend on the standard library's distribution details.
void shuffle_family(SetFamily& family, std::mt19937_64& rng) {
    for (std::size_t i = family.size(); i > 1; --i)
        std::swap(family[i - 1], family[rng() % i]);
}

double thread_cpu_seconds() {
    timespec ts{};
    clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
    return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace

Instance gen_random_instance(const GenParams& params) {
    if (params.n < 2)
        throw ValidationError(ErrorCode::BadInput, "instance generation needs n >= 2");
    if (!(params.rho >= 0.0 && params.rho <= 1.0))
        throw ValidationError(ErrorCode::BadInput, "density rho must lie in [0,1]");
    std::mt19937_64 rng(params.seed);
    Instance inst;
    inst.n = params.n;
    for (int i = 0; i < params.n; ++i)
        for (int j = i + 1; j < params.n; ++j) {
            if (uniform01(rng) >= params.rho) continue;
            const AttrSet edge = AttrSet::of({i, j});
            if (rng() & 1)
                inst.forbidden.push_back(edge);
            else
                inst.required.push_back(edge);
        }
    const AttrSet covered = family_union(inst.required);
    for (int i = 0; i < params.n; ++i)
        if (!covered.test(i)) inst.required.push_back(AttrSet::single(i));
    shuffle_family(inst.forbidden, rng);
    shuffle_family(inst.required, rng);
    return inst;
}

Instance medical_instance(int row) {
    static const char* names[] = {"ZIP code", "birth date", "gender",     "ethnicity", "weight",
                                  "diagnosis", "procedure",  "medication", "charges",   "hospital ID"};
    Instance inst;
    auto sets = [](std::initializer_list<std::initializer_list<int>> lists) {
        SetFamily fam;
        for (auto l : lists) fam.push_back(AttrSet::of(l));
        return fam;
    };
    switch (row) {
        case 1:
            inst.n = 6;
            inst.forbidden = sets({{0, 2, 3}, {0, 1, 2}, {0, 1, 4}, {1, 2, 3}});
            inst.required = sets({{1, 2, 5}, {1, 3, 5}, {0, 2, 5}, {4}});
            break;
        case 2:
            inst.n = 6;
            inst.forbidden = sets({{0, 2, 3}, {0, 1, 2}, {0, 1, 4}});
            inst.required = sets({{1, 2, 5}, {1, 3, 5}, {0, 2, 5}, {4}});
            break;
        case 3:
            inst.n = 10;
            inst.forbidden = sets({{0, 4, 5}, {1, 2, 3}, {8, 9}});
            inst.required = sets({{1, 2, 4}, {4, 5, 8}, {0, 9}, {2, 3, 8}});
            break;
        case 4:
            inst.n = 10;
            inst.forbidden = sets({{1, 3}, {1, 6, 8}, {3, 4}, {7, 9}, {0, 3, 6}});
            inst.required = sets({{0, 2, 3}, {0, 1, 2}, {3, 6}, {4, 6}, {7, 8}, {0, 7}, {9}});
            break;
        case 5:
            inst.n = 10;
            inst.forbidden = sets({{0, 2}, {1, 6, 8}, {3, 4}, {7, 9}, {0, 3}});
            inst.required =
                sets({{0, 1}, {1, 2, 8}, {3, 5}, {4, 6}, {7, 8}, {0, 4}, {2, 3}, {9}});
            break;
        default:
            throw ValidationError(ErrorCode::RowOutOfRange,
                                  "case-study row must be between 1 and 5");
    }
    inst.attribute_names.assign(names, names + inst.n);
    return inst;
}

namespace {

struct TrialRecord {
    double t_greedy = 0.0;
    double t_heuristic = 0.0;
    int s_greedy = 0;
    int s_heuristic = 0;
    int optimal = -1;
    bool exact_skipped = false;
};

}  // namespace

BenchRow bench(const GenParams& params, int trials, const BenchMethods& methods,
               const SolveLimits& budget, int jobs) {
    if (trials < 1) throw ValidationError(ErrorCode::BadInput, "trials must be at least 1");
    if (jobs < 1) throw ValidationError(ErrorCode::BadInput, "jobs must be at least 1");

    std::vector<TrialRecord> records(trials);
    auto run_trial = [&](int t) {
        GenParams trial = params;
        trial.seed = splitmix64(params.seed + 0x9E3779B97F4A7C15ull *
                                                  static_cast<std::uint64_t>(t + 1));
        const Instance inst = gen_random_instance(trial);
        TrialRecord& rec = records[t];
        if (methods.greedy) {
            const double t0 = thread_cpu_seconds();
            rec.s_greedy = greedy_cover(inst).cover.size();
            rec.t_greedy = thread_cpu_seconds() - t0;
        }
        if (methods.heuristic) {
            const double t0 = thread_cpu_seconds();
            rec.s_heuristic = heuristic_cover(inst).cover.size();
            rec.t_heuristic = thread_cpu_seconds() - t0;
        }
        if (methods.exact) {
            try {
                rec.optimal = optimal_cover(inst, budget).optimal_size;
            } catch (const BudgetExceededError&) {
                rec.exact_skipped = true;
            }
        }
    };

    if (jobs == 1) {
        for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int t; (t = next.fetch_add(1)) < trials;) run_trial(t);
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    BenchRow row;
    row.n = params.n;
    row.rho = params.rho;
    row.trials = trials;
    double sum_tg = 0.0, sum_th = 0.0, sum_red = 0.0, sum_over = 0.0;
    int with_optimal = 0;
    for (const TrialRecord& rec : records) {
        sum_tg += rec.t_greedy;
        sum_th += rec.t_heuristic;
        if (methods.greedy && methods.heuristic && rec.s_greedy > 0)
            sum_red += 100.0 * (rec.s_greedy - rec.s_heuristic) / rec.s_greedy;
        if (methods.exact) {
            if (rec.exact_skipped) {
                ++row.exact_skipped;
            } else {
                sum_over += 100.0 * (rec.s_heuristic - rec.optimal) / rec.optimal;
                ++with_optimal;
            }
        }
    }
    row.mean_time_greedy = sum_tg / trials;
    row.mean_time_heuristic = sum_th / trials;
    row.mean_pct_reduction = sum_red / trials;
    if (with_optimal > 0) row.mean_pct_over_optimal = sum_over / with_optimal;
    return row;
}

std::string bench_csv_header() {
    return "n,rho,trials,mean_t_greedy_s,mean_t_heur_s,mean_pct_reduction,mean_pct_over_opt,"
           "exact_skipped";
}

std::string bench_csv_row(const BenchRow& row, bool with_times) {
    std::string out = std::to_string(row.n);
    out += "," + format_double("%g", row.rho);
    out += "," + std::to_string(row.trials);
    out += ",";
    if (with_times) out += format_double("%.9f", row.mean_time_greedy);
    out += ",";
    if (with_times) out += format_double("%.9f", row.mean_time_heuristic);
    out += "," + format_double("%.6f", row.mean_pct_reduction);
    out += ",";
    if (row.mean_pct_over_optimal) out += format_double("%.6f", *row.mean_pct_over_optimal);
    out += "," + std::to_string(row.exact_skipped);
    return out;
}

}  // namespace covsolve
