#include "covsolve/boolpoly.hpp"

#include <algorithm>

namespace covsolve {

namespace {

// Sort descending and apply mod-2 cancellation of repeated monomials.
void canonicalize(std::vector<Mono>& monos) {
    std::sort(monos.begin(), monos.end(), [](Mono a, Mono b) { return mono_less(b, a); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < monos.size();) {
        std::size_t j = i;
        while (j < monos.size() && monos[j] == monos[i]) ++j;
        if ((j - i) % 2 != 0) monos[out++] = monos[i];
        i = j;
    }
    monos.resize(out);
}

}  // namespace

BoolPoly BoolPoly::from_monomials(std::vector<Mono> monos) {
    canonicalize(monos);
    BoolPoly p;
    p.monos_ = std::move(monos);
    return p;
}

BoolPoly poly_add(const BoolPoly& p, const BoolPoly& q) {
    std::vector<Mono> out;
    out.reserve(p.monomials().size() + q.monomials().size());
    auto i = p.monomials().begin();
    auto j = q.monomials().begin();
    while (i != p.monomials().end() && j != q.monomials().end()) {
        if (*i == *j) {
            ++i;
            ++j;
        } else if (mono_less(*j, *i)) {
            out.push_back(*i++);
        } else {
            out.push_back(*j++);
        }
    }
    out.insert(out.end(), i, p.monomials().end());
    out.insert(out.end(), j, q.monomials().end());
    BoolPoly r;
    r.monos_ = std::move(out);  // merge of canonical inputs stays canonical
    return r;
}

BoolPoly poly_mul(const BoolPoly& p, const BoolPoly& q) {
    std::vector<Mono> out;
    out.reserve(p.monomials().size() * q.monomials().size());
    for (Mono a : p.monomials())
        for (Mono b : q.monomials()) out.push_back(a | b);
    return BoolPoly::from_monomials(std::move(out));
}

BoolPoly mono_mul(Mono m, const BoolPoly& p) {
    std::vector<Mono> out;
    out.reserve(p.monomials().size());
    for (Mono a : p.monomials()) out.push_back(a | m);
    return BoolPoly::from_monomials(std::move(out));
}

bool poly_eval(const BoolPoly& p, const std::vector<std::uint8_t>& values) {
    bool acc = false;
    for (Mono m : p.monomials()) {
        bool term = true;
        for (Mono bits = m; bits; bits &= bits - 1)
            if (!values[std::countr_zero(bits)]) {
                term = false;
                break;
            }
        acc ^= term;
    }
    return acc;
}

BoolPoly substitute(const BoolPoly& p, int linear_index, bool value) {
    const Mono bit = Mono{1} << linear_index;
    std::vector<Mono> out;
    out.reserve(p.monomials().size());
    for (Mono m : p.monomials()) {
        if ((m & bit) == 0)
            out.push_back(m);
        else if (value)
            out.push_back(m & ~bit);
    }
    return BoolPoly::from_monomials(std::move(out));
}

}  // namespace covsolve
