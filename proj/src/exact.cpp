#include "covsolve/exact.hpp"

#include <algorithm>

#include "covsolve/bounds.hpp"

namespace covsolve {

namespace {

// Depth-first search over partitions of the required sets into at most t
// admissible groups, with restricted-growth symmetry breaking: a set may
// join a used group or open the next unused one. Complete for coverings of
// size <= t because any covering shrinks to such a partition (replace each
// fragment by the union of the required sets it houses).
struct PartitionSearch {
    const SetFamily* forbidden = nullptr;
    SetFamily order;                          // required sets, most-constrained first
    std::vector<std::vector<int>> touching;   // forbidden indices intersecting each set
    int t = 0;
    std::uint64_t max_nodes = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool collect_all = false;
    SetFamily groups;
    std::optional<Covering> first;
    std::vector<Covering> complete;

    bool admissible(int bi, const AttrSet& u) const {
        for (int ai : touching[bi])
            if ((*forbidden)[ai].subset_of(u)) return false;
        return true;
    }

    // Returns true when the search should unwind (hit, or budget exhausted).
    bool run(int bi) {
        if (bi == static_cast<int>(order.size())) {
            Covering cov;
            cov.fragments = groups;
            if (!collect_all) {
                first = std::move(cov);
                return true;
            }
            complete.push_back(std::move(cov));
            return false;
        }
        const AttrSet& b = order[bi];
        const int used = static_cast<int>(groups.size());
        const int limit = std::min(used + 1, t);
        for (int g = 0; g < limit; ++g) {
            if (nodes >= max_nodes) {
                budget_hit = true;
                return true;
            }
            ++nodes;
            if (g < used) {
                const AttrSet merged = groups[g] | b;
                if (!admissible(bi, merged)) continue;
                const AttrSet saved = groups[g];
                groups[g] = merged;
                if (run(bi + 1)) return true;
                groups[g] = saved;
            } else {
                groups.push_back(b);  // a lone required set is admissible when feasible
                if (run(bi + 1)) return true;
                groups.pop_back();
            }
        }
        return false;
    }
};

PartitionSearch make_search(const Instance& inst, int t, std::uint64_t max_nodes) {
    PartitionSearch s;
    s.forbidden = &inst.forbidden;
    s.order = inst.required;
    std::stable_sort(s.order.begin(), s.order.end(), [&](const AttrSet& a, const AttrSet& b) {
        return intersecting_degree(inst.forbidden, a) > intersecting_degree(inst.forbidden, b);
    });
    s.touching.resize(s.order.size());
    for (std::size_t bi = 0; bi < s.order.size(); ++bi)
        for (std::size_t ai = 0; ai < inst.forbidden.size(); ++ai)
            if (inst.forbidden[ai].intersects(s.order[bi]))
                s.touching[bi].push_back(static_cast<int>(ai));
    s.t = t;
    s.max_nodes = max_nodes;
    return s;
}

bool cover_less(const Covering& a, const Covering& b) {
    return std::lexicographical_compare(a.fragments.begin(), a.fragments.end(),
                                        b.fragments.begin(), b.fragments.end());
}

}  // namespace

DecideResult decide_cover_exists(const Instance& raw, int t, const SolveLimits& limits) {
    if (t < 1) throw ValidationError(ErrorCode::BadInput, "decision size t must be at least 1");
    const Instance inst = normalize(validate(raw));
    DecideResult res;
    if (!is_feasible(inst)) return res;  // No: nothing covers an infeasible instance
    if (inst.required.empty()) {
        res.status = Decision::Yes;
        res.cover = Covering{};
        return res;
    }
    PartitionSearch search = make_search(inst, t, limits.max_nodes);
    search.run(0);
    res.nodes_explored = search.nodes;
    if (search.budget_hit) {
        res.status = Decision::BudgetExceeded;
    } else if (search.first) {
        res.status = Decision::Yes;
        res.cover = std::move(search.first);
    }
    return res;
}

OptimalReport optimal_cover(const Instance& raw, const SolveLimits& limits, bool enumerate_all) {
    const Instance inst = normalize(validate(raw));
    if (auto v = feasibility_violation(inst))
        throw InfeasibleError("no covering exists: forbidden " + to_string(v->first) +
                              " ⊆ required " + to_string(v->second));
    OptimalReport report;
    if (inst.required.empty()) {
        if (enumerate_all) report.canonical_optimal_covers = std::vector<Covering>{Covering{}};
        return report;
    }
    const int s = static_cast<int>(inst.required.size());
    const int start = std::max(1, covering_lower_bound(inst));
    const int cap = std::min(s, limits.max_k);
    if (start > cap)
        throw BudgetExceededError("fragment-count cap " + std::to_string(limits.max_k) +
                                  " is below the lower bound " + std::to_string(start));
    std::uint64_t nodes = 0;
    for (int t = start; t <= cap; ++t) {
        SolveLimits step = limits;
        step.max_nodes = limits.max_nodes - nodes;
        const DecideResult dec = decide_cover_exists(inst, t, step);
        nodes += dec.nodes_explored;
        if (dec.status == Decision::BudgetExceeded)
            throw BudgetExceededError("node budget exhausted after " + std::to_string(nodes) +
                                      " nodes");
        if (dec.status == Decision::Yes) {
            report.optimal_size = t;
            report.one_cover = *dec.cover;
            break;
        }
        if (t == cap)
            throw BudgetExceededError("no covering within the fragment-count cap " +
                                      std::to_string(limits.max_k));
    }
    if (enumerate_all) {
        PartitionSearch search = make_search(inst, report.optimal_size, limits.max_nodes - nodes);
        search.collect_all = true;
        search.run(0);
        nodes += search.nodes;
        if (search.budget_hit)
            throw BudgetExceededError("node budget exhausted after " + std::to_string(nodes) +
                                      " nodes");
        std::vector<Covering> covers;
        covers.reserve(search.complete.size());
        for (Covering& cov : search.complete) covers.push_back(canonical(std::move(cov)));
        std::sort(covers.begin(), covers.end(), cover_less);
        covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
        report.canonical_optimal_covers = std::move(covers);
    }
    report.nodes_explored = nodes;
    return report;
}

std::vector<Covering> enumerate_optimal_covers(const Instance& inst, const SolveLimits& limits) {
    return *optimal_cover(inst, limits, true).canonical_optimal_covers;
}

}  // namespace covsolve
