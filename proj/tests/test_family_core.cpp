#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "covsolve/bounds.hpp"
#include "covsolve/errors.hpp"
#include "covsolve/exact.hpp"
#include "covsolve/experiments.hpp"
#include "covsolve/instance.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace covsolve;
using fixtures::four_attr_instance;
using fixtures::sets;

TEST_CASE("attribute sets behave like small ordered integer sets") {
    AttrSet s = AttrSet::of({0, 2, 5});
    CHECK(s.count() == 3);
    CHECK(s.test(0));
    CHECK(s.test(2));
    CHECK(s.test(5));
    CHECK_FALSE(s.test(1));
    CHECK(s.front() == 0);
    CHECK(to_string(s) == "{0,2,5}");
    CHECK(s.members() == std::vector<int>{0, 2, 5});

    AttrSet t = AttrSet::of({0, 2});
    CHECK(t.subset_of(s));
    CHECK(t.proper_subset_of(s));
    CHECK_FALSE(s.subset_of(t));
    CHECK(s.intersects(t));
    CHECK_FALSE(t.intersects(AttrSet::of({1, 3})));

    AttrSet u = s;
    u |= AttrSet::of({1});
    CHECK(u == AttrSet::of({0, 1, 2, 5}));
    u -= AttrSet::of({0, 5});
    CHECK(u == AttrSet::of({1, 2}));
    u &= AttrSet::of({2, 3});
    CHECK(u == AttrSet::single(2));

    CHECK(AttrSet::full(3) == AttrSet::of({0, 1, 2}));
    CHECK(AttrSet{}.empty());
    CHECK(AttrSet::single(100).test(100));  // beyond 64 bits
    CHECK(AttrSet::of({0, 2}) < AttrSet::of({1, 2}));  // 128-bit value order
    CHECK(AttrSet::single(2) < AttrSet::of({0, 1, 3}));
}

TEST_CASE("validation strips empty required sets and rejects bad forbidden sets") {
    Instance ok = four_attr_instance();
    CHECK_NOTHROW(validate(ok));

    Instance empties;
    empties.n = 3;
    empties.forbidden = sets({{0, 1}});
    empties.required = sets({{2}, {}});
    Instance v = validate(empties);
    CHECK(v.required.size() == 1);
    CHECK(v.required[0] == AttrSet::single(2));

    Instance singleton;
    singleton.n = 3;
    singleton.forbidden = sets({{0}});
    CHECK_THROWS_AS(validate(singleton), ValidationError);

    Instance empty_forbidden;
    empty_forbidden.n = 3;
    empty_forbidden.forbidden = sets({{}});
    CHECK_THROWS_AS(validate(empty_forbidden), ValidationError);

    Instance out_of_range;
    out_of_range.n = 3;
    out_of_range.required = sets({{5}});
    CHECK_THROWS_AS(validate(out_of_range), ValidationError);

    Instance bad_n;
    bad_n.n = -1;
    CHECK_THROWS_AS(validate(bad_n), ValidationError);

    Instance named = four_attr_instance();
    named.attribute_names = {"a", "b"};
    CHECK_THROWS_AS(validate(named), ValidationError);
    named.attribute_names = {"a", "b", "c", "d"};
    CHECK_NOTHROW(validate(named));
}

TEST_CASE("degrees count memberships and intersections") {
    SetFamily req = sets({{1, 2, 5}, {1, 3, 5}, {0, 2, 5}, {4}});
    CHECK(element_degree(req, 5) == 3);
    CHECK(element_degree(req, 1) == 2);
    CHECK(element_degree(req, 6) == 0);
    CHECK(family_degree(req, 6) == 3);
    CHECK(family_degree(SetFamily{}, 6) == 0);

    SetFamily forb = sets({{0, 2, 3}, {0, 1, 2}, {0, 1, 4}, {1, 2, 3}});
    CHECK(intersecting_degree(forb, AttrSet::of({1, 2, 5})) == 4);
    CHECK(intersecting_degree(forb, AttrSet::of({4})) == 1);
    CHECK(intersecting_degree(forb, AttrSet::of({5})) == 0);
    CHECK(family_degree(forb, 6) == 3);
}

TEST_CASE("antichain extraction keeps minimal or maximal sets") {
    CHECK(minimal_sets(sets({{1, 2}, {1, 2, 3}})) == sets({{1, 2}}));
    CHECK(maximal_sets(sets({{1, 4}, {1}})) == sets({{1, 4}}));
    CHECK(minimal_sets(sets({{1, 2}, {1, 2}})) == sets({{1, 2}}));
    CHECK(maximal_sets(sets({{0}, {1}})) == sets({{0}, {1}}));
    CHECK(is_antichain(sets({{0, 1}, {1, 2}})));
    CHECK_FALSE(is_antichain(sets({{0}, {0, 1}})));
}

TEST_CASE("normalization reduces to antichains and completes the attribute union") {
    Instance inst;
    inst.n = 4;
    inst.forbidden = sets({{1, 2}, {1, 2, 3}});
    inst.required = sets({{1, 3}, {3}, {2, 3}});
    Instance norm = normalize(inst);
    CHECK(norm.forbidden == sets({{1, 2}}));
    // {3} absorbed, then singleton completion for 0 appended last.
    CHECK(norm.required == sets({{1, 3}, {2, 3}, {0}}));

    // Idempotence: a second pass changes nothing.
    CHECK(normalize(norm).required == norm.required);
    CHECK(normalize(norm).forbidden == norm.forbidden);

    // Instances whose required sets already span the universe gain nothing.
    Instance fa = normalize(four_attr_instance());
    CHECK(fa.required == four_attr_instance().required);
    CHECK(fa.forbidden == four_attr_instance().forbidden);
}

TEST_CASE("normalization preserves which families are coverings") {
    // Valid whenever the required sets already span all attributes; the
    // generator guarantees that via singleton completion.
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        GenParams gp{4, 0.5 + 0.4 * (trial % 2), rng()};
        Instance inst = gen_random_instance(gp);
        Instance norm = normalize(inst);
        // Enumerate all families with at most 3 nonempty fragments.
        std::vector<AttrSet> subs;
        for (unsigned mask = 1; mask < 16; ++mask) {
            AttrSet s;
            for (int i = 0; i < 4; ++i)
                if (mask & (1u << i)) s.set(i);
            subs.push_back(s);
        }
        for (std::size_t a = 0; a < subs.size(); ++a)
            for (std::size_t b = a; b < subs.size(); ++b)
                for (std::size_t c = b; c < subs.size(); ++c) {
                    Covering cov{SetFamily{subs[a], subs[b], subs[c]}};
                    CHECK(is_covering(inst, cov) == is_covering(norm, cov));
                }
    }
}

TEST_CASE("feasibility matches the containment criterion") {
    CHECK(is_feasible(four_attr_instance()));

    Instance bad;
    bad.n = 4;
    bad.forbidden = sets({{1, 2}});
    bad.required = sets({{1, 2, 3}});
    CHECK_FALSE(is_feasible(bad));
    auto viol = feasibility_violation(bad);
    REQUIRE(viol.has_value());
    CHECK(viol->first == AttrSet::of({1, 2}));
    CHECK(viol->second == AttrSet::of({1, 2, 3}));

    Instance no_forbidden;
    no_forbidden.n = 3;
    no_forbidden.required = sets({{0, 1, 2}});
    CHECK(is_feasible(no_forbidden));
}

TEST_CASE("feasibility is equivalent to the existence of a covering") {
    std::mt19937_64 rng(77);
    int infeasible_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Instance inst = oracle::random_instance(rng, 2 + static_cast<int>(rng() % 4));
        if (is_feasible(inst)) {
            OptimalReport rep = optimal_cover(inst);
            CHECK(rep.optimal_size >= 1);
            CHECK(is_covering(inst, rep.one_cover));
        } else {
            ++infeasible_seen;
            CHECK_THROWS_AS(optimal_cover(inst), InfeasibleError);
        }
    }
    CHECK(infeasible_seen > 0);  // the sample exercises both branches
}

TEST_CASE("covering check enforces both conditions") {
    Instance inst = four_attr_instance();
    CHECK(is_covering(inst, Covering{sets({{1, 3}, {0, 2, 3}})}));
    // One fragment containing the forbidden triple fails.
    CHECK_FALSE(is_covering(inst, Covering{sets({{0, 1, 2, 3}})}));
    // {1,3} housed nowhere fails.
    CHECK_FALSE(is_covering(inst, Covering{sets({{0, 3}, {2}})}));
    // Empty fragments are harmless when the rest covers.
    CHECK(is_covering(inst, Covering{sets({{1, 3}, {0, 2, 3}, {}})}));
}

TEST_CASE("domination transfers coverings") {
    Instance a;
    a.n = 6;
    a.forbidden = sets({{1, 2}});
    a.required = sets({{3, 4, 5}});
    Instance b;
    b.n = 6;
    b.forbidden = sets({{1, 2, 3}});
    b.required = sets({{3, 4}});
    CHECK(dominates(a, b));
    CHECK_FALSE(dominates(b, a));
    CHECK(dominates(a, a));

    Instance c = b;
    c.forbidden = sets({{4, 5}});
    CHECK_FALSE(dominates(a, c));

    Instance other_universe = b;
    other_universe.n = 7;
    CHECK_THROWS_AS(dominates(a, other_universe), ValidationError);

    // Every covering of a dominating instance covers the dominated one.
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        Instance x = oracle::random_feasible_instance(rng, 4);
        Instance y = oracle::random_instance(rng, 4);
        if (!dominates(x, y)) continue;
        OptimalReport rep = optimal_cover(x, SolveLimits{}, true);
        REQUIRE(rep.canonical_optimal_covers.has_value());
        for (const auto& cov : *rep.canonical_optimal_covers) CHECK(is_covering(y, cov));
    }
}

TEST_CASE("punctured covering removes one attribute per fragment") {
    Covering punct = punctured_covering(4, sets({{0, 1}, {2, 3}}), AttrSet::of({0, 1}));
    CHECK(punct.fragments == sets({{1, 2, 3}, {0, 2, 3}}));

    SetFamily fam = sets({{0, 1}, {1, 2}, {0, 2}});
    CHECK(punctured_covering(3, fam, AttrSet::of({0, 1})).fragments == sets({{1, 2}, {0, 2}}));

    CHECK_THROWS_AS(punctured_covering(3, sets({{0}, {0, 1}}), AttrSet::single(0)), ValidationError);
    CHECK_THROWS_AS(punctured_covering(3, fam, AttrSet::of({1, 2, 0})), ValidationError);

    // The construction is a covering of the instance that forbids the chosen
    // set and requires the rest.
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        SetFamily anti;
        for (int tries = 0; tries < 30 && anti.size() < 4; ++tries) {
            AttrSet s = oracle::random_subset(rng, n, 2 + static_cast<int>(rng() % 2));
            if (std::find(anti.begin(), anti.end(), s) != anti.end()) continue;
            SetFamily trial_fam = anti;
            trial_fam.push_back(s);
            if (is_antichain(trial_fam)) anti = trial_fam;
        }
        if (anti.size() < 2) continue;
        Instance inst;
        inst.n = n;
        inst.forbidden = SetFamily{anti[0]};
        inst.required = SetFamily(anti.begin() + 1, anti.end());
        Covering cov = punctured_covering(n, anti, anti[0]);
        CHECK(is_covering(validate(inst), cov));
    }
}

TEST_CASE("canonical form sorts fragments and drops empties") {
    Covering cov{sets({{2, 3}, {}, {0, 1, 3}, {2, 3}})};
    Covering canon = canonical(cov);
    CHECK(canon.fragments == sets({{0, 1, 3}, {2, 3}}));
}

TEST_CASE("bounds report matches hand-computed values") {
    BoundsReport med = bounds(medical_instance(1));
    CHECK(med.lower == 2);
    CHECK(med.greedy_upper == 28);
    CHECK(med.heuristic_upper == 4);
    CHECK(med.refined_upper == 4);
    CHECK(med.k == 3);
    CHECK(med.degF == 3);
    CHECK(med.degA == 3);
    CHECK(med.probabilistic_size_bound == doctest::Approx(2 * std::pow(2.0 * 3 * 3, 3) * std::log(6.0)));
    CHECK(med.probabilistic_degree_bound == doctest::Approx(2 * std::pow(2.0 * 3 * 3, 2) * std::log(6.0)));

    BoundsReport fa = bounds(four_attr_instance());
    CHECK(fa.lower == 2);
    CHECK(fa.greedy_upper == 5);
    CHECK(fa.heuristic_upper == 3);
    CHECK(fa.refined_upper == 3);
    CHECK(fa.k == 2);
    CHECK(fa.degF == 1);
    CHECK(fa.degA == 2);

    Instance no_forbidden;
    no_forbidden.n = 3;
    no_forbidden.required = sets({{0, 1}, {2}});
    CHECK(covering_lower_bound(no_forbidden) == 1);
    BoundsReport nf = bounds(no_forbidden);
    CHECK(nf.lower == 1);
    CHECK(nf.heuristic_upper == 1);  // everything merges into one fragment
    CHECK(nf.probabilistic_size_bound == 0.0);

    Instance empty_required;
    empty_required.n = 0;
    CHECK(covering_lower_bound(empty_required) == 0);

    Instance infeasible;
    infeasible.n = 4;
    infeasible.forbidden = sets({{1, 2}});
    infeasible.required = sets({{1, 2, 3}});
    CHECK_THROWS_AS(bounds(infeasible), InfeasibleError);
}

TEST_CASE("lower bound denominator is positive on feasible instances") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        Instance inst = normalize(oracle::random_feasible_instance(rng, 3 + static_cast<int>(rng() % 4)));
        if (inst.forbidden.empty() || inst.required.empty()) continue;
        int worst = 0;
        for (const auto& a : inst.forbidden) {
            int best = static_cast<int>(inst.required.size());
            for (int v : a.members()) best = std::min(best, element_degree(inst.required, v));
            worst = std::max(worst, best);
        }
        CHECK(static_cast<int>(inst.required.size()) - worst > 0);
        CHECK(covering_lower_bound(inst) >= 1);
    }
}

TEST_CASE("lower bound never exceeds the optimum") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);  // up to n = 8
        GenParams gp{n, 0.2 + 0.1 * static_cast<double>(trial % 8), rng()};
        Instance inst = gen_random_instance(gp);
        if (!is_feasible(inst)) continue;
        OptimalReport rep = optimal_cover(inst);
        CHECK(covering_lower_bound(inst) <= rep.optimal_size);
    }
}
