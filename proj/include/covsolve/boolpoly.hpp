#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace covsolve {

// Multilinear monomial over at most 64 variables: bit b set means the
// variable with linear index b occurs. 0 is the constant monomial 1.
using Mono = std::uint64_t;

inline int mono_degree(Mono m) { return std::popcount(m); }
inline bool mono_divides(Mono a, Mono b) { return (a & ~b) == 0; }

// Degree-reverse-lexicographic order where a LOWER linear index is a GREATER
// variable: compare total degree first, then the highest differing bit —
// the monomial containing it is the smaller one.
inline bool mono_less(Mono a, Mono b) {
    const int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    const Mono diff = a ^ b;
    if (diff == 0) return false;
    const Mono high = Mono{1} << (63 - std::countl_zero(diff));
    return (a & high) != 0;
}

// Polynomial over F2 with idempotent variables (x^2 = x): a set of
// multilinear monomials, stored strictly descending in the monomial order.
class BoolPoly {
public:
    BoolPoly() = default;  // zero
    explicit BoolPoly(Mono m) : monos_{m} {}

    static BoolPoly one() { return BoolPoly(Mono{0}); }
    static BoolPoly var(int linear_index) { return BoolPoly(Mono{1} << linear_index); }
    static BoolPoly from_monomials(std::vector<Mono> monos);  // mod-2 canonicalization

    bool is_zero() const { return monos_.empty(); }
    bool is_one() const { return monos_.size() == 1 && monos_[0] == 0; }
    int degree() const { return monos_.empty() ? -1 : mono_degree(monos_.front()); }
    Mono leading() const { return monos_.front(); }  // requires nonzero
    const std::vector<Mono>& monomials() const { return monos_; }

    friend bool operator==(const BoolPoly&, const BoolPoly&) = default;
    friend BoolPoly poly_add(const BoolPoly& p, const BoolPoly& q);

private:
    std::vector<Mono> monos_;
};

BoolPoly poly_add(const BoolPoly& p, const BoolPoly& q);
BoolPoly poly_mul(const BoolPoly& p, const BoolPoly& q);
// Multiply by a single monomial; distinct monomials may collapse and cancel.
BoolPoly mono_mul(Mono m, const BoolPoly& p);

// values[b] is the bit assigned to linear index b.
bool poly_eval(const BoolPoly& p, const std::vector<std::uint8_t>& values);

BoolPoly substitute(const BoolPoly& p, int linear_index, bool value);

}  // namespace covsolve
