#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covsolve/boolpoly.hpp"
#include "covsolve/instance.hpp"

namespace covsolve {

// Variable x_{i,j}: attribute i gets color j. Ordered lexicographically by
// (color, attribute); linear index (j-1)*n + i realizes that order.
struct VarId {
    int attribute = 0;
    int color = 1;  // 1-based
    friend bool operator==(const VarId&, const VarId&) = default;
};

inline bool operator<(const VarId& a, const VarId& b) {
    if (a.color != b.color) return a.color < b.color;
    return a.attribute < b.attribute;
}

inline int var_linear_index(VarId v, int n) { return (v.color - 1) * n + v.attribute; }
inline VarId var_from_linear_index(int idx, int n) { return {idx % n, idx / n + 1}; }
std::string var_name(VarId v);  // "x_i_j"

// Total assignment of the k*n variables, indexed linearly.
struct Assignment {
    int n = 0;
    int k = 0;
    std::vector<std::uint8_t> values;  // size n*k
    bool value(VarId v) const { return values[var_linear_index(v, n)] != 0; }
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

// mu(i)_j = 1 iff attribute i carries color j.
struct MultiColoring {
    int n = 0;
    int k = 0;
    std::vector<std::uint8_t> mu;  // row-major, mu[i*k + (j-1)]
    bool get(int attribute, int color) const { return mu[attribute * k + (color - 1)] != 0; }
    void set(int attribute, int color, bool bit) { mu[attribute * k + (color - 1)] = bit; }
    friend bool operator==(const MultiColoring&, const MultiColoring&) = default;
};

struct IdealGenerators {
    int n = 0;
    int k = 0;
    std::vector<BoolPoly> g1;  // one monomial per (forbidden set, color)
    std::vector<BoolPoly> g2;  // one polynomial per required set
    std::vector<BoolPoly> all() const;
};

struct AlgebraicLimits {
    std::uint64_t max_nodes = 50'000'000;  // root-enumeration backtrack nodes
    std::uint64_t max_pairs = 200'000;     // Buchberger pair reductions
    int max_vars = 24;                     // enumeration variable cap
    int max_k = 16;                        // color counts tried by algebraic_optimal_size
};

// Generators whose common roots are exactly the multi-colorings inducing a
// covering with at most k colors. Normalizes the instance first.
IdealGenerators encode_ideal(const Instance& inst, int k);

std::string poly_to_string(const BoolPoly& p, int n);
std::string dump_generators(const IdealGenerators& gens);  // one polynomial per line

MultiColoring to_multicoloring(const Assignment& a);
Covering multicoloring_to_covering(const MultiColoring& mu);
MultiColoring covering_to_multicoloring(const Covering& cov, int k, int n);

bool poly_eval(const BoolPoly& p, const Assignment& a);

// All common roots, by backtracking in linear-index order with value 0 tried
// before 1. Throws ValidationError(VariableCapExceeded) when k*n exceeds
// limits.max_vars and BudgetExceededError when the node budget runs out.
std::vector<Assignment> enumerate_roots(const IdealGenerators& gens,
                                        const AlgebraicLimits& limits = {});

enum class FeasibilityStatus { Feasible, Infeasible, BudgetExceeded };

struct BuchbergerResult {
    FeasibilityStatus status = FeasibilityStatus::Infeasible;
    std::vector<BoolPoly> basis;  // reduced basis when Feasible
    std::uint64_t pairs_processed = 0;
};

// Buchberger's algorithm in the Boolean quotient ring; Infeasible iff the
// basis collapses to {1}.
BuchbergerResult buchberger_feasible(const IdealGenerators& gens,
                                     const AlgebraicLimits& limits = {});

// Smallest k for which the ideal has a root; equals the optimal covering
// size. Uses root enumeration while k*n <= limits.max_vars, Buchberger above
// that. Throws InfeasibleError on infeasible instances.
int algebraic_optimal_size(const Instance& inst, const AlgebraicLimits& limits = {});

}  // namespace covsolve
