#pragma once

#include <vector>

#include "covsolve/attr_set.hpp"

namespace covsolve {

// Ordered list of attribute sets. Order matters to the greedy solver;
// duplicates are tolerated until normalization removes them.
using SetFamily = std::vector<AttrSet>;

// Number of family members containing attribute i.
int element_degree(const SetFamily& family, int i);

// Number of family members intersecting b.
int intersecting_degree(const SetFamily& family, const AttrSet& b);

// max over i in [0,n) of element_degree; 0 for an empty family.
int family_degree(const SetFamily& family, int n);

AttrSet family_union(const SetFamily& family);

// No member strictly contains another (duplicates violate nothing).
bool is_antichain(const SetFamily& family);

// Inclusion-minimal members, first occurrence kept, relative order preserved.
SetFamily minimal_sets(const SetFamily& family);

// Inclusion-maximal members, first occurrence kept, relative order preserved.
SetFamily maximal_sets(const SetFamily& family);

}  // namespace covsolve
