#include "covsolve/greedy.hpp"

#include <algorithm>

namespace covsolve {

namespace {

Instance feasible_normalized(const Instance& raw) {
    Instance inst = normalize(validate(raw));
    if (auto v = feasibility_violation(inst))
        throw InfeasibleError("no covering exists: forbidden " + to_string(v->first) +
                              " ⊆ required " + to_string(v->second));
    return inst;
}

bool admits(const SetFamily& forbidden, const AttrSet& u) {
    for (const AttrSet& a : forbidden)
        if (a.subset_of(u)) return false;
    return true;
}

GreedyResult run_pass(const Instance& inst, const SetFamily& order) {
    GreedyResult res;
    SetFamily& frags = res.cover.fragments;
    res.trace.steps.reserve(order.size());
    for (int bi = 0; bi < static_cast<int>(order.size()); ++bi) {
        const AttrSet& b = order[bi];
        GreedyStep step;
        step.required_index = bi;
        bool contained = false;
        for (const AttrSet& x : frags)
            if (b.subset_of(x)) {
                contained = true;
                break;
            }
        if (contained) {
            step.action = GreedyAction::AlreadyContained;
            res.trace.steps.push_back(step);
            continue;
        }
        int target = -1;
        for (int x = 0; x < static_cast<int>(frags.size()) && target < 0; ++x)
            if (admits(inst.forbidden, frags[x] | b)) target = x;
        if (target >= 0) {
            frags[target] |= b;
            step.action = GreedyAction::Merged;
            step.fragment = target;
        } else {
            frags.push_back(b);
            step.action = GreedyAction::AppendedNew;
        }
        res.trace.steps.push_back(step);
    }
    return res;
}

}  // namespace

GreedyResult greedy_cover(const Instance& raw) {
    const Instance inst = feasible_normalized(raw);
    return run_pass(inst, inst.required);
}

SetFamily heuristic_order(const Instance& raw) {
    const Instance inst = normalize(validate(raw));
    SetFamily order = inst.required;
    std::stable_sort(order.begin(), order.end(), [&](const AttrSet& a, const AttrSet& b) {
        return intersecting_degree(inst.forbidden, a) > intersecting_degree(inst.forbidden, b);
    });
    return order;
}

GreedyResult heuristic_cover(const Instance& raw) {
    const Instance inst = feasible_normalized(raw);
    return run_pass(inst, heuristic_order(inst));
}

bool verify_theorem9(const Instance& raw, const Covering& cov) {
    const Instance inst = normalize(validate(raw));
    int k = 0;
    for (const AttrSet& b : inst.required) k = std::max(k, b.count());
    const int deg_f = family_degree(inst.forbidden, inst.n);
    const int deg_a = family_degree(inst.required, inst.n);
    if (cov.size() > k * deg_f * deg_a + 1) return false;
    for (int v = 0; v < inst.n; ++v)
        if (element_degree(cov.fragments, v) > element_degree(inst.required, v)) return false;
    return true;
}

}  // namespace covsolve
