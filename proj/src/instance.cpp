#include "covsolve/instance.hpp"

#include <algorithm>

namespace covsolve {

int element_degree(const SetFamily& family, int i) {
    int d = 0;
    for (const AttrSet& s : family) d += s.test(i);
    return d;
}

int intersecting_degree(const SetFamily& family, const AttrSet& b) {
    int d = 0;
    for (const AttrSet& s : family) d += s.intersects(b);
    return d;
}

int family_degree(const SetFamily& family, int n) {
    int best = 0;
    for (int i = 0; i < n; ++i) best = std::max(best, element_degree(family, i));
    return best;
}

AttrSet family_union(const SetFamily& family) {
    AttrSet u;
    for (const AttrSet& s : family) u |= s;
    return u;
}

bool is_antichain(const SetFamily& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j)
            if (i != j && family[i].proper_subset_of(family[j])) return false;
    return true;
}

namespace {

enum class Keep { Minimal, Maximal };

SetFamily antichain_of(const SetFamily& family, Keep keep) {
    SetFamily out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < family.size() && !drop; ++j) {
            if (j == i) continue;
            if (keep == Keep::Minimal ? family[j].proper_subset_of(family[i])
                                      : family[i].proper_subset_of(family[j]))
                drop = true;
            if (family[j] == family[i] && j < i) drop = true;  // keep first duplicate
        }
        if (!drop) out.push_back(family[i]);
    }
    return out;
}

}  // namespace

SetFamily minimal_sets(const SetFamily& family) { return antichain_of(family, Keep::Minimal); }
SetFamily maximal_sets(const SetFamily& family) { return antichain_of(family, Keep::Maximal); }

Instance validate(Instance inst) {
    if (inst.n < 0 || inst.n > AttrSet::max_universe)
        throw ValidationError(ErrorCode::AttributeOutOfRange,
                              "universe size " + std::to_string(inst.n) + " outside [0, " +
                                  std::to_string(AttrSet::max_universe) + "]");
    if (!inst.attribute_names.empty() &&
        inst.attribute_names.size() != static_cast<std::size_t>(inst.n))
        throw ValidationError(ErrorCode::UniverseMismatch,
                              "attribute_names has " + std::to_string(inst.attribute_names.size()) +
                                  " entries for universe size " + std::to_string(inst.n));
    const AttrSet universe = AttrSet::full(inst.n);
    auto check_range = [&](const AttrSet& s, const char* which) {
        if (!s.subset_of(universe))
            throw ValidationError(ErrorCode::AttributeOutOfRange,
                                  std::string(which) + " set " + to_string(s) +
                                      " not contained in [0, " + std::to_string(inst.n) + ")");
    };
    for (const AttrSet& s : inst.forbidden) {
        check_range(s, "forbidden");
        if (s.empty())
            throw ValidationError(ErrorCode::EmptyForbiddenSet, "forbidden family contains {}");
        if (s.count() == 1)
            throw ValidationError(ErrorCode::SingletonForbiddenSet,
                                  "forbidden family contains singleton " + to_string(s));
    }
    for (const AttrSet& s : inst.required) check_range(s, "required");
    std::erase_if(inst.required, [](const AttrSet& s) { return s.empty(); });
    return inst;
}

std::optional<std::pair<AttrSet, AttrSet>> feasibility_violation(const Instance& inst) {
    for (const AttrSet& a : inst.forbidden)
        for (const AttrSet& b : inst.required)
            if (a.subset_of(b)) return std::make_pair(a, b);
    return std::nullopt;
}

bool is_feasible(const Instance& inst) { return !feasibility_violation(inst).has_value(); }

Instance normalize(Instance inst) {
    inst.forbidden = minimal_sets(inst.forbidden);
    inst.required = maximal_sets(inst.required);
    const AttrSet covered = family_union(inst.required);
    for (int i = 0; i < inst.n; ++i)
        if (!covered.test(i)) inst.required.push_back(AttrSet::single(i));
    return inst;
}

Covering canonical(Covering cov) {
    std::erase_if(cov.fragments, [](const AttrSet& s) { return s.empty(); });
    std::sort(cov.fragments.begin(), cov.fragments.end());
    cov.fragments.erase(std::unique(cov.fragments.begin(), cov.fragments.end()),
                        cov.fragments.end());
    return cov;
}

bool is_covering(const Instance& inst, const Covering& cov) {
    for (const AttrSet& a : inst.forbidden)
        for (const AttrSet& x : cov.fragments)
            if (a.subset_of(x)) return false;
    for (const AttrSet& b : inst.required) {
        bool housed = false;
        for (const AttrSet& x : cov.fragments)
            if (b.subset_of(x)) {
                housed = true;
                break;
            }
        if (!housed) return false;
    }
    return true;
}

bool dominates(const Instance& a, const Instance& b) {
    if (a.n != b.n)
        throw ValidationError(ErrorCode::UniverseMismatch,
                              "universe sizes differ: " + std::to_string(a.n) + " vs " +
                                  std::to_string(b.n));
    for (const AttrSet& fb : b.forbidden) {
        bool witnessed = false;
        for (const AttrSet& fa : a.forbidden)
            if (fa.subset_of(fb)) {
                witnessed = true;
                break;
            }
        if (!witnessed) return false;
    }
    for (const AttrSet& rb : b.required) {
        bool witnessed = false;
        for (const AttrSet& ra : a.required)
            if (rb.subset_of(ra)) {
                witnessed = true;
                break;
            }
        if (!witnessed) return false;
    }
    return true;
}

Covering punctured_covering(int n, const SetFamily& family, const AttrSet& chosen) {
    if (!is_antichain(family))
        throw ValidationError(ErrorCode::NotAntichain, "family is not an antichain");
    if (std::find(family.begin(), family.end(), chosen) == family.end())
        throw ValidationError(ErrorCode::ChosenNotInFamily,
                              to_string(chosen) + " is not a member of the family");
    Covering cov;
    const AttrSet universe = AttrSet::full(n);
    for (int i : chosen.members()) cov.fragments.push_back(universe - AttrSet::single(i));
    return cov;
}

}  // namespace covsolve
