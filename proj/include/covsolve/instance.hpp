#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covsolve/errors.hpp"
#include "covsolve/family.hpp"

namespace covsolve {

// A data-splitting problem: universe P = {0,...,n-1}, forbidden sets that must
// not co-reside in one fragment, required sets that must co-reside in some fragment.
struct Instance {
    int n = 0;
    SetFamily forbidden;
    SetFamily required;
    std::vector<std::string> attribute_names;  // empty, or exactly n entries
};

// Checks structural invariants and strips empty required sets.
// Forbidden sets must have at least two members: an empty or singleton
// forbidden set can never be avoided once its attributes are stored at all.
Instance validate(Instance inst);

// A covering exists iff no forbidden set is contained in a required set.
bool is_feasible(const Instance& inst);

// First (forbidden, required) pair witnessing infeasibility, if any.
std::optional<std::pair<AttrSet, AttrSet>> feasibility_violation(const Instance& inst);

// Forbidden -> inclusion-minimal antichain, required -> inclusion-maximal
// antichain, then singletons {i} appended (ascending i) for every attribute
// not covered by the required family, so that its union is the whole universe.
Instance normalize(Instance inst);

// A candidate solution: one fragment per storage location.
struct Covering {
    SetFamily fragments;
    int size() const { return static_cast<int>(fragments.size()); }
    friend bool operator==(const Covering&, const Covering&) = default;
};

// Canonical form: empty fragments dropped, fragments sorted and deduplicated.
Covering canonical(Covering cov);

// True iff no forbidden set is inside any fragment and every required set is
// inside some fragment.
bool is_covering(const Instance& inst, const Covering& cov);

// True iff every forbidden set of b contains a forbidden set of a and every
// required set of b is contained in a required set of a. Then any covering of
// a is also a covering of b.
bool dominates(const Instance& a, const Instance& b);

// {P \ {i} : i in chosen} for a member set `chosen` of an antichain family;
// always a ({chosen}, family minus {chosen})-covering.
Covering punctured_covering(int n, const SetFamily& family, const AttrSet& chosen);

}  // namespace covsolve
