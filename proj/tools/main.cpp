#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "covsolve/bounds.hpp"
#include "covsolve/exact.hpp"
#include "covsolve/experiments.hpp"
#include "covsolve/greedy.hpp"
#include "covsolve/ideal.hpp"
#include "covsolve/json_io.hpp"

namespace {

using namespace covsolve;

constexpr int exit_ok = 0;
constexpr int exit_infeasible = 1;
constexpr int exit_budget = 2;
constexpr int exit_input = 3;

std::string fmt_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

int run_check(const std::string& in, bool json) {
    const Instance inst = load_instance_file(in);
    const auto violation = feasibility_violation(inst);
    if (json) {
        std::cout << feasibility_to_json(inst);
    } else if (violation) {
        std::cout << "infeasible: forbidden " << to_string(violation->first)
                  << " ⊆ required " << to_string(violation->second) << "\n";
    } else {
        std::cout << "feasible\n";
    }
    return violation ? exit_infeasible : exit_ok;
}

int run_bounds(const std::string& in, bool json) {
    const BoundsReport r = bounds(load_instance_file(in));
    if (json) {
        std::cout << bounds_to_json(r);
        return exit_ok;
    }
    std::printf("%-26s %d\n", "lower", r.lower);
    std::printf("%-26s %d\n", "greedy_upper", r.greedy_upper);
    std::printf("%-26s %d\n", "heuristic_upper", r.heuristic_upper);
    std::printf("%-26s %d\n", "refined_upper", r.refined_upper);
    std::printf("%-26s %s\n", "probabilistic_size_bound",
                fmt_double("%.6g", r.probabilistic_size_bound).c_str());
    std::printf("%-26s %s\n", "probabilistic_degree_bound",
                fmt_double("%.6g", r.probabilistic_degree_bound).c_str());
    std::printf("%-26s %d\n", "k", r.k);
    std::printf("%-26s %d\n", "degF", r.degF);
    std::printf("%-26s %d\n", "degA", r.degA);
    return exit_ok;
}

void print_covering_human(const Covering& cov, const std::string& method,
                          const GreedyTrace* trace, const SetFamily& order) {
    std::cout << "method " << method << "\n";
    std::cout << "size " << cov.size() << "\n";
    for (int i = 0; i < cov.size(); ++i)
        std::cout << "fragment " << i + 1 << ": " << to_string(cov.fragments[i]) << "\n";
    int storage = 0;
    for (const AttrSet& x : cov.fragments) storage += x.count();
    std::cout << "storage " << storage << "\n";
    std::cout << "max_degree " << family_degree(cov.fragments, AttrSet::max_universe) << "\n";
    if (!trace) return;
    for (const GreedyStep& step : trace->steps) {
        std::cout << "step " << step.required_index + 1 << ": required "
                  << to_string(order[step.required_index]);
        switch (step.action) {
            case GreedyAction::Merged:
                std::cout << " merged into fragment " << step.fragment + 1;
                break;
            case GreedyAction::AlreadyContained:
                std::cout << " already contained";
                break;
            case GreedyAction::AppendedNew:
                std::cout << " appended as a new fragment";
                break;
        }
        std::cout << "\n";
    }
}

int run_greedy(const std::string& in, bool json, bool trace, bool heuristic) {
    const Instance inst = load_instance_file(in);
    const GreedyResult res = heuristic ? heuristic_cover(inst) : greedy_cover(inst);
    const std::string method = heuristic ? "heuristic" : "greedy";
    if (json) {
        std::cout << covering_to_json(res.cover, method, trace ? &res.trace : nullptr);
        return exit_ok;
    }
    const SetFamily order =
        heuristic ? heuristic_order(inst) : normalize(validate(inst)).required;
    print_covering_human(res.cover, method, trace ? &res.trace : nullptr, order);
    return exit_ok;
}

int run_exact(const std::string& in, bool json, std::uint64_t budget, bool enumerate_all,
              int max_k) {
    SolveLimits limits;
    limits.max_nodes = budget;
    limits.max_k = max_k;
    const OptimalReport rep = optimal_cover(load_instance_file(in), limits, enumerate_all);
    if (json) {
        std::cout << optimal_report_to_json(rep);
        return exit_ok;
    }
    std::cout << "optimal_size " << rep.optimal_size << "\n";
    std::cout << "cover:";
    for (const AttrSet& x : rep.one_cover.fragments) std::cout << " " << to_string(x);
    std::cout << "\n";
    std::cout << "nodes " << rep.nodes_explored << "\n";
    if (rep.canonical_optimal_covers) {
        std::cout << "canonical_optimal_covers " << rep.canonical_optimal_covers->size() << "\n";
        for (const Covering& cov : *rep.canonical_optimal_covers) {
            std::cout << "cover:";
            for (const AttrSet& x : cov.fragments) std::cout << " " << to_string(x);
            std::cout << "\n";
        }
    }
    return exit_ok;
}

int run_algebraic(const std::string& in, bool json, std::uint64_t budget, int max_vars,
                  int max_k) {
    const Instance inst = load_instance_file(in);
    AlgebraicLimits limits;
    limits.max_vars = max_vars;
    limits.max_k = max_k;
    if (budget > 0) {
        limits.max_nodes = budget;
        limits.max_pairs = budget;
    }
    const int k = algebraic_optimal_size(inst, limits);
    const std::string method = k * inst.n <= limits.max_vars ? "enumeration" : "buchberger";
    if (json) {
        std::cout << algebraic_to_json(k, method);
    } else {
        std::cout << "optimal_size " << k << "\n";
        std::cout << "method " << method << "\n";
    }
    return exit_ok;
}

int run_roots(const std::string& in, int k, bool json, bool dump, int max_vars,
              std::uint64_t budget) {
    const IdealGenerators gens = encode_ideal(load_instance_file(in), k);
    AlgebraicLimits limits;
    limits.max_vars = max_vars;
    if (budget > 0) limits.max_nodes = budget;
    const std::vector<Assignment> roots = enumerate_roots(gens, limits);
    if (json) {
        std::cout << roots_to_json(gens, roots, dump);
        return exit_ok;
    }
    if (dump) std::cout << dump_generators(gens);
    std::cout << "roots " << roots.size() << "\n";
    for (const Assignment& root : roots) {
        std::string bits(root.values.size(), '0');
        for (std::size_t i = 0; i < root.values.size(); ++i)
            bits[i] = root.values[i] ? '1' : '0';
        std::cout << "root " << bits << " ->";
        const Covering cov = multicoloring_to_covering(to_multicoloring(root));
        for (const AttrSet& x : cov.fragments) std::cout << " " << to_string(x);
        std::cout << "\n";
    }
    return exit_ok;
}

int run_gen(int n, double rho, std::uint64_t seed) {
    std::cout << instance_to_json(gen_random_instance({n, rho, seed}));
    return exit_ok;
}

int run_bench(int n, double rho, int trials, std::uint64_t seed, int jobs, bool exact,
              std::uint64_t budget, bool timings) {
    BenchMethods methods;
    methods.exact = exact;
    SolveLimits limits;
    if (budget > 0) limits.max_nodes = budget;
    const BenchRow row = bench({n, rho, seed}, trials, methods, limits, jobs);
    std::cout << bench_csv_header() << "\n" << bench_csv_row(row, timings) << "\n";
    return exit_ok;
}

int run_medical(int row) {
    std::cout << instance_to_json(medical_instance(row));
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for (F,A)-coverings: privacy-preserving vertical data splitting"};
    app.require_subcommand(1);

    std::string in;
    bool json = false, trace = false, enumerate_all = false, dump = false, exact_flag = false,
         timings = false;
    std::uint64_t budget = 0, seed = 0;
    int n = 0, k = 0, max_vars = 24, max_k = 0, trials = 1000, jobs = 1, row = 0;
    double rho = 0.0;

    CLI::App* c_check = app.add_subcommand("check", "Validate an instance and test feasibility");
    c_check->add_option("--in", in, "instance JSON file")->required();
    c_check->add_flag("--json", json, "JSON output");

    CLI::App* c_bounds = app.add_subcommand("bounds", "Closed-form covering-size bounds");
    c_bounds->add_option("--in", in)->required();
    c_bounds->add_flag("--json", json);

    CLI::App* c_greedy = app.add_subcommand("greedy", "Greedy covering construction");
    c_greedy->add_option("--in", in)->required();
    c_greedy->add_flag("--json", json);
    c_greedy->add_flag("--trace", trace, "report the branch taken per required set");

    CLI::App* c_heur = app.add_subcommand("heuristic", "Degree-sorted greedy construction");
    c_heur->add_option("--in", in)->required();
    c_heur->add_flag("--json", json);
    c_heur->add_flag("--trace", trace);

    CLI::App* c_exact = app.add_subcommand("exact", "Optimal covering via partition search");
    c_exact->add_option("--in", in)->required();
    c_exact->add_flag("--json", json);
    c_exact->add_option("--budget", budget, "search-node budget");
    c_exact->add_flag("--enumerate", enumerate_all, "list all canonical optimal coverings");
    c_exact->add_option("--max-k", max_k, "cap on the covering size considered");

    CLI::App* c_alg = app.add_subcommand("algebraic", "Smallest k with a nonempty ideal variety");
    c_alg->add_option("--in", in)->required();
    c_alg->add_flag("--json", json);
    c_alg->add_option("--budget", budget, "node/pair budget");
    c_alg->add_option("--max-vars", max_vars, "variable cap for root enumeration");
    c_alg->add_option("--max-k", max_k, "largest color count tried");

    CLI::App* c_roots = app.add_subcommand("roots", "Enumerate common roots of the ideal");
    c_roots->add_option("--in", in)->required();
    c_roots->add_option("--k", k, "color count")->required();
    c_roots->add_flag("--json", json);
    c_roots->add_flag("--dump-ideal", dump, "print the generators");
    c_roots->add_option("--max-vars", max_vars);
    c_roots->add_option("--budget", budget);

    CLI::App* c_gen = app.add_subcommand("gen", "Generate a random instance");
    c_gen->add_option("--n", n, "vertex count")->required();
    c_gen->add_option("--rho", rho, "total edge density")->required();
    c_gen->add_option("--seed", seed, "64-bit seed");

    CLI::App* c_bench = app.add_subcommand("bench", "Benchmark greedy vs heuristic (CSV)");
    c_bench->add_option("--n", n)->required();
    c_bench->add_option("--rho", rho)->required();
    c_bench->add_option("--trials", trials);
    c_bench->add_option("--seed", seed);
    c_bench->add_option("--jobs", jobs, "parallel trial workers");
    c_bench->add_flag("--exact", exact_flag, "also solve each trial exactly");
    c_bench->add_option("--budget", budget, "per-trial exact-solve node budget");
    c_bench->add_flag("--timings", timings, "include CPU-time columns");

    CLI::App* c_med = app.add_subcommand("medical", "Emit a case-study instance");
    c_med->add_option("--row", row, "row 1..5")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (app.got_subcommand(c_check)) return run_check(in, json);
        if (app.got_subcommand(c_bounds)) return run_bounds(in, json);
        if (app.got_subcommand(c_greedy)) return run_greedy(in, json, trace, false);
        if (app.got_subcommand(c_heur)) return run_greedy(in, json, trace, true);
        if (app.got_subcommand(c_exact))
            return run_exact(in, json, budget > 0 ? budget : SolveLimits{}.max_nodes,
                             enumerate_all, max_k > 0 ? max_k : SolveLimits{}.max_k);
        if (app.got_subcommand(c_alg))
            return run_algebraic(in, json, budget, max_vars,
                                 max_k > 0 ? max_k : AlgebraicLimits{}.max_k);
        if (app.got_subcommand(c_roots)) return run_roots(in, k, json, dump, max_vars, budget);
        if (app.got_subcommand(c_gen)) return run_gen(n, rho, seed);
        if (app.got_subcommand(c_bench))
            return run_bench(n, rho, trials, seed, jobs, exact_flag, budget, timings);
        if (app.got_subcommand(c_med)) return run_medical(row);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_infeasible;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    }
    return exit_input;
}
