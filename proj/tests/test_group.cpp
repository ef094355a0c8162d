#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "sumfree/group.hpp"

using namespace sumfree;

TEST_CASE("make_group normalizes to the invariant-factor chain") {
    FinAbGroup g7 = FinAbGroup::make({7});
    CHECK(g7.order() == 7);
    CHECK(g7.exponent() == 7);

    FinAbGroup g77 = FinAbGroup::make({7, 7});
    CHECK(g77.order() == 49);
    CHECK(g77.exponent() == 7);

    FinAbGroup g = FinAbGroup::make({7, 91});
    CHECK(g.order() == 637);
    CHECK(g.exponent() == 91);
    CHECK(g.invariant_factors() == std::vector<long long>({7, 91}));

    // arbitrary decompositions are normalized: Z6 x Z4 = Z2 x Z12
    FinAbGroup mixed = FinAbGroup::make({6, 4});
    CHECK(mixed.invariant_factors() == std::vector<long long>({2, 12}));

    CHECK_THROWS_AS(FinAbGroup::make({}), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup::make({1}), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup::make({0, 5}), std::invalid_argument);
}

TEST_CASE("element arithmetic through indices") {
    FinAbGroup g = FinAbGroup::make({7, 7});
    Elem a = g.at({2, 3}), b = g.at({6, 5});
    CHECK(g.coords(g.add(a, b)) == std::vector<long long>({1, 1}));
    CHECK(g.add(a, g.neg(a)) == g.zero());
    CHECK(g.scale(3, a) == g.at({6, 2}));
    CHECK(g.element_order(g.at({0, 0})) == 1);
    CHECK(g.element_order(a) == 7);
    FinAbGroup z = FinAbGroup::make({7, 91});
    CHECK(z.element_order(z.at({0, 13})) == 7);
    CHECK(z.element_order(z.at({1, 1})) == 91);
}

TEST_CASE("group types") {
    CHECK(group_type(FinAbGroup::make({10})).type == GroupType::I);
    CHECK(group_type(FinAbGroup::make({10})).p == 2);
    CHECK(group_type(FinAbGroup::make({9})).type == GroupType::II);
    CHECK(group_type(FinAbGroup::make({91})).type == GroupType::III);
    CHECK(group_type(FinAbGroup::make({7, 7})).type == GroupType::III);
}

TEST_CASE("subgroup enumeration") {
    auto s7 = enumerate_subgroups(FinAbGroup::make({7}));
    CHECK(s7.size() == 2);

    FinAbGroup g77 = FinAbGroup::make({7, 7});
    auto s77 = enumerate_subgroups(g77);
    CHECK(s77.size() == 10);
    long long order7 = 0;
    for (auto& s : s77) {
        // subgroup axioms, exhaustively
        CHECK(s.set.contains(0));
        CHECK(s.set.sum_with(s.set) == s.set);
        CHECK(49 % s.order() == 0);
        if (s.order() == 7) {
            ++order7;
            CHECK(s.invariant_factors == std::vector<long long>({7}));
        }
    }
    CHECK(order7 == 8);

    auto s49 = enumerate_subgroups(FinAbGroup::make({49}));
    CHECK(s49.size() == 3);
    CHECK(s49[1].invariant_factors == std::vector<long long>({7}));

    // deterministic order: cardinality then lexicographic
    for (size_t i = 1; i < s77.size(); ++i)
        CHECK(s77[i - 1].set.size_lex_less(s77[i].set));

    Guards tight;
    tight.max_structural_order = 10;
    CHECK_THROWS_AS(enumerate_subgroups(g77, tight), GuardExceeded);
}

TEST_CASE("surjection enumeration") {
    CHECK(enumerate_surjections_to_cyclic(FinAbGroup::make({7}), 7).size() == 6);
    CHECK(enumerate_surjections_to_cyclic(FinAbGroup::make({7, 7}), 7).size() == 48);
    CHECK_THROWS_AS(enumerate_surjections_to_cyclic(FinAbGroup::make({7}), 13),
                    std::invalid_argument);
    // well-definedness invariant: d_i g_i = 0 mod q
    FinAbGroup g = FinAbGroup::make({7, 91});
    for (const auto& f : enumerate_surjections_to_cyclic(g, 7)) {
        CHECK(f.surjective);
        for (int i = 0; i < g.rank(); ++i)
            CHECK(g.invariant_factors()[i] * f.images[i] % 7 == 0);
    }
}

TEST_CASE("splitting enumeration and unique decomposition") {
    FinAbGroup g7 = FinAbGroup::make({7});
    CHECK(enumerate_splittings(g7).size() == 6);

    FinAbGroup g77 = FinAbGroup::make({7, 7});
    auto splits = enumerate_splittings(g77);
    CHECK(splits.size() == 336);
    // each x = h + c*gen exactly once
    const auto& s = splits.front();
    std::set<Elem> seen;
    for (Elem h : s.H.set.elements())
        for (long long c = 0; c < 7; ++c) seen.insert(g77.add(h, g77.scale(c, s.gen)));
    CHECK(seen.size() == 49);
    CHECK(splitting_projection(g77, s).surjective);

    // splitting count stays below n m ln n
    CHECK((double)splits.size() <= 49.0 * 7.0 * std::log(49.0));
    CHECK(6.0 <= 7.0 * 7.0 * std::log(7.0));
}

TEST_CASE("stabilizers") {
    FinAbGroup g7 = FinAbGroup::make({7});
    GroupSubset full = GroupSubset::full(g7);
    CHECK(stabilizer(full).order() == 7);
    GroupSubset empty(g7);
    CHECK(stabilizer(empty).order() == 7);

    GroupSubset a = GroupSubset::of(g7, {3, 4});
    CHECK(stabilizer(a).order() == 1);

    // coset of a subgroup has that subgroup as stabilizer
    FinAbGroup g77 = FinAbGroup::make({7, 7});
    auto subs = enumerate_subgroups(g77);
    for (const auto& k : subs) {
        GroupSubset coset = k.set.translated(g77.at({3, 5}));
        CHECK(stabilizer(coset).set == k.set);
    }

    // translation invariance
    std::mt19937_64 rng(11);
    for (int it = 0; it < 50; ++it) {
        GroupSubset r(g77);
        for (int i = 0; i < 6; ++i) r.insert((Elem)(rng() % 49));
        Elem t = (Elem)(rng() % 49);
        CHECK(stabilizer(r).set == stabilizer(r.translated(t)).set);
    }
}

TEST_CASE("automorphism generators and closure orders") {
    CHECK(automorphism_group_order(FinAbGroup::make({7})) == 6);
    CHECK(automorphism_group_order(FinAbGroup::make({49})) == 42);
    CHECK(automorphism_group_order(FinAbGroup::make({7, 7})) == 2016);   // (49-1)(49-7)
    CHECK(automorphism_group_order(FinAbGroup::make({13})) == 12);

    // generators permute the subgroup list set-wise
    FinAbGroup g77 = FinAbGroup::make({7, 7});
    auto subs = enumerate_subgroups(g77);
    std::set<std::vector<unsigned long long>> sets;
    for (auto& s : subs) sets.insert(s.set.words());
    for (const auto& p : automorphism_generators(g77))
        for (auto& s : subs) CHECK(sets.count(apply_perm(p, s.set).words()) == 1);

    // brute-force path on a non-uniform group: Aut(Z7 + Z91) = GL(2,7) x U(13)
    CHECK(automorphism_group_order(FinAbGroup::make({7, 91})) == 2016 * 12);
}

TEST_CASE("layers") {
    FinAbGroup g7 = FinAbGroup::make({7});
    CyclicHom id{7, {1}, true};
    auto lay = layers(GroupSubset::full(g7), id);
    for (long long i = 0; i < 7; ++i) CHECK(lay.at(i).size() == 1);

    auto lay2 = layers(GroupSubset::of(g7, {3, 4}), id);
    CHECK(lay2.at(3).size() == 1);
    CHECK(lay2.at(4).size() == 1);
    CHECK(lay2.at(0).size() == 0);

    // (H,[3,4]) in (7,7) under the projection with kernel H
    FinAbGroup g77 = FinAbGroup::make({7, 7});
    auto splits = enumerate_splittings(g77);
    const auto& s = splits.front();
    GroupSubset a(g77);
    for (Elem h : s.H.set.elements())
        for (long long c : {3, 4}) a.insert(g77.add(h, g77.scale(c, s.gen)));
    auto f = splitting_projection(g77, s);
    auto lay3 = layers(a, f);
    CHECK(lay3.at(3).size() == 7);
    CHECK(lay3.at(4).size() == 7);
    long long total = 0;
    for (long long i = 0; i < 7; ++i) total += lay3.at(i).size();
    CHECK(total == a.size());

    CyclicHom notsurj{7, {0}, false};
    CHECK_THROWS_AS(layers(GroupSubset::full(g7), notsurj), std::invalid_argument);
}

TEST_CASE("pigeonhole sumset law on dense coset subsets") {
    // A in H+x, B in H+y with min(|A|,|B|) > |H|/2 forces A+B = H+x+y
    std::mt19937_64 rng(23);
    std::vector<FinAbGroup> pool = {FinAbGroup::make({7, 7}), FinAbGroup::make({91}),
                                    FinAbGroup::make({7, 7, 7})};
    for (const auto& g : pool) {
        auto subs = enumerate_subgroups(g);
        for (int it = 0; it < 120; ++it) {
            const auto& h = subs[rng() % subs.size()];
            Elem x = (Elem)(rng() % g.order()), y = (Elem)(rng() % g.order());
            auto he = h.set.elements();
            long long take = h.order() / 2 + 1;
            GroupSubset a(g), b(g);
            std::shuffle(he.begin(), he.end(), rng);
            for (long long i = 0; i < take; ++i) a.insert(g.add(he[i], x));
            std::shuffle(he.begin(), he.end(), rng);
            for (long long i = 0; i < take; ++i) b.insert(g.add(he[i], y));
            CHECK(a.sum_with(b) == h.set.translated(g.add(x, y)));
        }
    }
}
