#include "covsolve/ideal.hpp"

#include <algorithm>
#include <queue>

namespace covsolve {

namespace {

Instance feasible_normalized(const Instance& raw) {
    Instance inst = normalize(validate(raw));
    if (auto v = feasibility_violation(inst))
        throw InfeasibleError("no covering exists: forbidden " + to_string(v->first) +
                              " ⊆ required " + to_string(v->second));
    return inst;
}

Mono set_monomial(const AttrSet& s, int color, int n) {
    Mono m = 0;
    for (int i : s.members()) m |= Mono{1} << var_linear_index({i, color}, n);
    return m;
}

}  // namespace

std::string var_name(VarId v) {
    return "x_" + std::to_string(v.attribute) + "_" + std::to_string(v.color);
}

std::vector<BoolPoly> IdealGenerators::all() const {
    std::vector<BoolPoly> out = g1;
    out.insert(out.end(), g2.begin(), g2.end());
    return out;
}

IdealGenerators encode_ideal(const Instance& raw, int k) {
    if (k < 1) throw ValidationError(ErrorCode::BadInput, "color count k must be at least 1");
    const Instance inst = normalize(validate(raw));
    if (static_cast<long long>(k) * inst.n > 64)
        throw ValidationError(ErrorCode::VariableCapExceeded,
                              "k*n = " + std::to_string(k * inst.n) +
                                  " exceeds the 64-variable monomial representation");
    IdealGenerators gens;
    gens.n = inst.n;
    gens.k = k;
    for (int j = 1; j <= k; ++j)
        for (const AttrSet& a : inst.forbidden)
            gens.g1.push_back(BoolPoly(set_monomial(a, j, inst.n)));
    for (const AttrSet& b : inst.required) {
        BoolPoly p = BoolPoly::one();
        for (int j = 1; j <= k; ++j)
            p = poly_mul(p, poly_add(BoolPoly(set_monomial(b, j, inst.n)), BoolPoly::one()));
        gens.g2.push_back(p);
    }
    return gens;
}

std::string poly_to_string(const BoolPoly& p, int n) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first_term = true;
    for (Mono m : p.monomials()) {
        if (!first_term) out += " + ";
        first_term = false;
        if (m == 0) {
            out += "1";
            continue;
        }
        bool first_var = true;
        for (Mono bits = m; bits; bits &= bits - 1) {
            if (!first_var) out += "*";
            first_var = false;
            out += var_name(var_from_linear_index(std::countr_zero(bits), n));
        }
    }
    return out;
}

std::string dump_generators(const IdealGenerators& gens) {
    std::string out;
    for (const BoolPoly& p : gens.g1) out += poly_to_string(p, gens.n) + "\n";
    for (const BoolPoly& p : gens.g2) out += poly_to_string(p, gens.n) + "\n";
    return out;
}

MultiColoring to_multicoloring(const Assignment& a) {
    MultiColoring mu;
    mu.n = a.n;
    mu.k = a.k;
    mu.mu.assign(static_cast<std::size_t>(a.n) * a.k, 0);
    for (int j = 1; j <= a.k; ++j)
        for (int i = 0; i < a.n; ++i) mu.set(i, j, a.value({i, j}));
    return mu;
}

Covering multicoloring_to_covering(const MultiColoring& mu) {
    Covering cov;
    for (int j = 1; j <= mu.k; ++j) {
        AttrSet frag;
        for (int i = 0; i < mu.n; ++i)
            if (mu.get(i, j)) frag.set(i);
        if (!frag.empty()) cov.fragments.push_back(frag);
    }
    return cov;
}

MultiColoring covering_to_multicoloring(const Covering& cov, int k, int n) {
    if (cov.size() > k)
        throw ValidationError(ErrorCode::SizeExceedsK, "covering has " +
                                                           std::to_string(cov.size()) +
                                                           " fragments but k = " +
                                                           std::to_string(k));
    MultiColoring mu;
    mu.n = n;
    mu.k = k;
    mu.mu.assign(static_cast<std::size_t>(n) * k, 0);
    for (int j = 1; j <= cov.size(); ++j)
        for (int i : cov.fragments[j - 1].members()) mu.set(i, j, true);
    return mu;
}

bool poly_eval(const BoolPoly& p, const Assignment& a) { return poly_eval(p, a.values); }

namespace {

// Backtracking over the linear variable order, value 0 before 1; generators
// are carried in restricted form, pruning as soon as one is forced to 1.
struct RootSearch {
    int nv = 0;
    int n = 0;
    int k = 0;
    std::uint64_t max_nodes = 0;
    std::uint64_t nodes = 0;
    bool stop_on_first = false;
    bool found_any = false;
    std::vector<std::uint8_t> values;
    std::vector<Assignment> roots;

    bool descend(int depth, const std::vector<BoolPoly>& polys) {
        if (depth == nv) {
            found_any = true;
            if (!stop_on_first) roots.push_back(Assignment{n, k, values});
            return stop_on_first;
        }
        for (int val = 0; val <= 1; ++val) {
            if (++nodes > max_nodes)
                throw BudgetExceededError("root enumeration exhausted its node budget");
            values[depth] = static_cast<std::uint8_t>(val);
            std::vector<BoolPoly> next;
            next.reserve(polys.size());
            bool dead = false;
            for (const BoolPoly& p : polys) {
                BoolPoly q = substitute(p, depth, val != 0);
                if (q.is_one()) {
                    dead = true;
                    break;
                }
                if (!q.is_zero()) next.push_back(std::move(q));
            }
            if (!dead && descend(depth + 1, next)) return true;
        }
        values[depth] = 0;
        return false;
    }
};

RootSearch run_root_search(const IdealGenerators& gens, const AlgebraicLimits& limits,
                           bool stop_on_first) {
    const int nv = gens.n * gens.k;
    if (nv > limits.max_vars)
        throw ValidationError(ErrorCode::VariableCapExceeded,
                              "k*n = " + std::to_string(nv) + " exceeds the variable cap " +
                                  std::to_string(limits.max_vars));
    RootSearch search;
    search.nv = nv;
    search.n = gens.n;
    search.k = gens.k;
    search.max_nodes = limits.max_nodes;
    search.stop_on_first = stop_on_first;
    search.values.assign(nv, 0);
    std::vector<BoolPoly> polys;
    bool contradiction = false;
    for (BoolPoly& p : gens.all()) {
        if (p.is_one()) contradiction = true;
        if (!p.is_zero()) polys.push_back(std::move(p));
    }
    if (!contradiction) search.descend(0, polys);
    return search;
}

}  // namespace

std::vector<Assignment> enumerate_roots(const IdealGenerators& gens,
                                        const AlgebraicLimits& limits) {
    return run_root_search(gens, limits, false).roots;
}

namespace {

struct CriticalPair {
    int degree = 0;       // of the lcm driving the pair
    std::uint64_t seq = 0;  // insertion order, for deterministic tie-breaks
    int i = 0;
    int j = 0;    // second generator for an S-pair
    int var = -1;  // >= 0 selects a field pair x_var^2 + x_var against i
};

struct PairOrder {
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
        if (a.degree != b.degree) return a.degree > b.degree;  // min-heap by degree
        return a.seq > b.seq;
    }
};

// Full normal form of h modulo basis. A reducer g applies to the head t only
// when mul(t \ LM(g), g) still has head t: the idempotent multiplication can
// collapse monomials and cancel the head, in which case g is skipped. No
// monomial of the quotient exceeds t, so the head strictly decreases.
BoolPoly reduce_modulo(BoolPoly h, const std::vector<BoolPoly>& basis) {
    std::vector<Mono> remainder;
    while (!h.is_zero()) {
        const Mono t = h.leading();
        const BoolPoly* used = nullptr;
        BoolPoly q;
        for (const BoolPoly& g : basis) {
            if (g.is_zero() || !mono_divides(g.leading(), t)) continue;
            BoolPoly cand = mono_mul(t & ~g.leading(), g);
            if (!cand.is_zero() && cand.leading() == t) {
                q = std::move(cand);
                used = &g;
                break;
            }
        }
        if (used) {
            h = poly_add(h, q);
        } else {
            remainder.push_back(t);
            h = poly_add(h, BoolPoly(t));
        }
    }
    return BoolPoly::from_monomials(std::move(remainder));
}

BoolPoly s_pair(const BoolPoly& f, const BoolPoly& g) {
    const Mono l = f.leading() | g.leading();
    return poly_add(mono_mul(l & ~f.leading(), f), mono_mul(l & ~g.leading(), g));
}

// Reduced pair of g with the field relation of a variable in its head:
// S(g, x_v^2 + x_v) collapses to mul(x_v, g + LT(g)) + LT(g).
BoolPoly field_pair(const BoolPoly& g, int var) {
    const Mono head = g.leading();
    const BoolPoly tail = poly_add(g, BoolPoly(head));
    return poly_add(mono_mul(Mono{1} << var, tail), BoolPoly(head));
}

}  // namespace

BuchbergerResult buchberger_feasible(const IdealGenerators& gens, const AlgebraicLimits& limits) {
    BuchbergerResult result;
    std::vector<BoolPoly> basis;
    std::priority_queue<CriticalPair, std::vector<CriticalPair>, PairOrder> queue;
    std::uint64_t seq = 0;

    auto enqueue_for = [&](int idx) {
        const Mono lm = basis[idx].leading();
        for (int prev = 0; prev < idx; ++prev) {
            if (basis[prev].is_zero()) continue;
            const Mono l = lm | basis[prev].leading();
            queue.push({mono_degree(l), seq++, prev, idx, -1});
        }
        for (Mono bits = lm; bits; bits &= bits - 1)
            queue.push({mono_degree(lm) + 1, seq++, idx, -1, std::countr_zero(bits)});
    };

    for (const BoolPoly& p : gens.all()) {
        if (p.is_zero()) continue;
        if (p.is_one()) return result;  // Infeasible, zero pairs processed
        if (std::find(basis.begin(), basis.end(), p) != basis.end()) continue;
        basis.push_back(p);
        enqueue_for(static_cast<int>(basis.size()) - 1);
    }

    while (!queue.empty()) {
        if (result.pairs_processed >= limits.max_pairs) {
            result.status = FeasibilityStatus::BudgetExceeded;
            return result;
        }
        const CriticalPair pair = queue.top();
        queue.pop();
        ++result.pairs_processed;
        const BoolPoly s = pair.var < 0 ? s_pair(basis[pair.i], basis[pair.j])
                                        : field_pair(basis[pair.i], pair.var);
        BoolPoly r = reduce_modulo(s, basis);
        if (r.is_zero()) continue;
        if (r.is_one()) return result;  // Infeasible
        basis.push_back(std::move(r));
        enqueue_for(static_cast<int>(basis.size()) - 1);
    }

    // Minimal basis: drop any element whose head another head divides.
    std::vector<BoolPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (j == i) continue;
            const Mono a = basis[j].leading(), b = basis[i].leading();
            if (mono_divides(a, b) && (a != b || j < i)) keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // Interreduce tails until stable.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<BoolPoly> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            BoolPoly r = reduce_modulo(minimal[i], others);
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
        std::erase_if(minimal, [](const BoolPoly& p) { return p.is_zero(); });
    }
    std::sort(minimal.begin(), minimal.end(), [](const BoolPoly& a, const BoolPoly& b) {
        return mono_less(b.leading(), a.leading());
    });
    result.status = FeasibilityStatus::Feasible;
    result.basis = std::move(minimal);
    return result;
}

int algebraic_optimal_size(const Instance& raw, const AlgebraicLimits& limits) {
    const Instance inst = feasible_normalized(raw);
    const int s = static_cast<int>(inst.required.size());
    if (s == 0) return 0;
    const int cap = std::min(limits.max_k, s);
    for (int k = 1; k <= cap; ++k) {
        const IdealGenerators gens = encode_ideal(inst, k);
        if (gens.n * k <= limits.max_vars) {
            if (run_root_search(gens, limits, true).found_any) return k;
        } else {
            const BuchbergerResult res = buchberger_feasible(gens, limits);
            if (res.status == FeasibilityStatus::Feasible) return k;
            if (res.status == FeasibilityStatus::BudgetExceeded)
                throw BudgetExceededError("Buchberger pair budget exhausted at k = " +
                                          std::to_string(k));
        }
    }
    throw BudgetExceededError("no feasible color count within the cap " + std::to_string(cap));
}

}  // namespace covsolve
