#pragma once

#include <initializer_list>
#include <vector>

#include "covsolve/instance.hpp"

namespace fixtures {

using covsolve::AttrSet;
using covsolve::Covering;
using covsolve::Instance;
using covsolve::SetFamily;

inline SetFamily sets(std::initializer_list<std::initializer_list<int>> lists) {
    SetFamily fam;
    for (auto l : lists) fam.push_back(AttrSet::of(l));
    return fam;
}

// Four attributes, one forbidden triple; the smallest covering has two
// fragments. Used as the worked example throughout the tests.
inline Instance four_attr_instance() {
    Instance inst;
    inst.n = 4;
    inst.forbidden = sets({{0, 1, 2}});
    inst.required = sets({{0, 3}, {1, 3}, {2}});
    return inst;
}

// Six known optimal covering families of four_attr_instance (canonical form).
inline std::vector<Covering> four_attr_known_covers() {
    std::vector<Covering> out;
    auto add = [&](std::initializer_list<std::initializer_list<int>> lists) {
        out.push_back(canonical(Covering{sets(lists)}));
    };
    add({{1, 3}, {0, 2, 3}});
    add({{1, 2, 3}, {0, 3}});
    add({{1, 2}, {0, 1, 3}});
    add({{2, 3}, {0, 1, 3}});
    add({{1, 2, 3}, {0, 1, 3}});
    add({{2}, {0, 1, 3}});
    return out;
}

}  // namespace fixtures
