#include "covsolve/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "covsolve/greedy.hpp"

namespace covsolve {

namespace {

Instance feasible_normalized(const Instance& raw) {
    Instance inst = normalize(validate(raw));
    if (auto v = feasibility_violation(inst))
        throw InfeasibleError("no covering exists: forbidden " + to_string(v->first) +
                              " ⊆ required " + to_string(v->second));
    return inst;
}

int max_set_size(const SetFamily& family) {
    int k = 0;
    for (const AttrSet& s : family) k = std::max(k, s.count());
    return k;
}

}  // namespace

int covering_lower_bound(const Instance& raw) {
    const Instance inst = feasible_normalized(raw);
    const int s = static_cast<int>(inst.required.size());
    if (s == 0) return 0;
    if (inst.forbidden.empty()) return 1;
    int worst = 0;
    for (const AttrSet& a : inst.forbidden) {
        int best = std::numeric_limits<int>::max();
        for (int i : a.members()) best = std::min(best, element_degree(inst.required, i));
        worst = std::max(worst, best);
    }
    const int den = s - worst;  // positive for feasible instances
    return (s + den - 1) / den;
}

BoundsReport bounds(const Instance& raw) {
    const Instance inst = feasible_normalized(raw);
    const int s = static_cast<int>(inst.required.size());

    BoundsReport r;
    r.k = max_set_size(inst.required);
    r.degF = family_degree(inst.forbidden, inst.n);
    r.degA = family_degree(inst.required, inst.n);
    r.lower = covering_lower_bound(inst);
    r.greedy_upper = r.k * r.degF * r.degA + 1;

    const SetFamily sorted = heuristic_order(inst);
    int prop11 = 0;
    for (int i = 1; i <= s; ++i) {
        const int alpha = intersecting_degree(inst.forbidden, sorted[i - 1]) * r.degA;
        prop11 = std::max(prop11, std::min(alpha + 1, i));
    }
    r.heuristic_upper = prop11;

    // Fragment count can only grow at step i when every current fragment is
    // blocked, which needs deg_B(F)*deg(A) at least as large as the count.
    int chain = s == 0 ? 0 : 1;
    for (int i = 2; i <= s; ++i) {
        const int alpha = intersecting_degree(inst.forbidden, sorted[i - 1]) * r.degA;
        if (alpha >= chain) ++chain;
    }
    r.refined_upper = chain;

    const int k_both = std::max(r.k, max_set_size(inst.forbidden));
    const double d = r.degF;
    if (inst.n > 1 && d > 0) {
        const double base = 2.0 * k_both * d;
        r.probabilistic_size_bound = 2.0 * std::pow(base, k_both) * std::log(inst.n);
        r.probabilistic_degree_bound = 2.0 * std::pow(base, k_both - 1) * std::log(inst.n);
    }
    return r;
}

}  // namespace covsolve
