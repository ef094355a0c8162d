#include "sumfree/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sumfree/classify.hpp"
#include "sumfree/sumfree_ops.hpp"

namespace sumfree {

namespace {

struct UnionFind {
    std::vector<int> parent, size;
    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

OrbitReport orbit_partition(const std::vector<GroupSubset>& sets, const std::vector<Perm>& gens) {
    std::map<std::vector<unsigned long long>, int> index;
    for (size_t i = 0; i < sets.size(); ++i) index.emplace(sets[i].words(), (int)i);
    UnionFind uf((int)sets.size());
    for (const auto& p : gens)
        for (size_t i = 0; i < sets.size(); ++i) {
            GroupSubset img = apply_perm(p, sets[i]);
            auto it = index.find(img.words());
            if (it == index.end())
                throw TheoremViolation("automorphism image leaves the acted family: set " +
                                       std::to_string(i));
            uf.unite((int)i, it->second);
        }
    std::map<int, std::vector<int>> orbits;
    for (size_t i = 0; i < sets.size(); ++i) orbits[uf.find((int)i)].push_back((int)i);
    OrbitReport rep;
    rep.acted_size = (long long)sets.size();
    rep.orbit_count = (long long)orbits.size();
    for (auto& [root, members] : orbits) {
        (void)root;
        rep.orbit_sizes.push_back((long long)members.size());
        int best = members.front();
        for (int m : members)
            if (sets[m].lex_less(sets[best])) best = m;
        rep.representatives.push_back(sets[best]);
    }
    std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
    std::sort(rep.representatives.begin(), rep.representatives.end(),
              [](const GroupSubset& a, const GroupSubset& b) { return a.lex_less(b); });
    return rep;
}

OrbitReport orbit_count_extremal(const FinAbGroup& g, const Guards& guards) {
    std::vector<GroupSubset> sets;
    std::string provenance;
    bool dfs_ok = g.order() <= guards.max_bruteforce_order ||
                  (g.rank() == 1 && g.exponent() <= guards.max_bruteforce_cyclic_m);
    if (dfs_ok) {
        sets = enumerate_extremal(g, guards);
        provenance = "dfs";
    } else {
        // generate L(G) through the classification constructions; complete
        // by the classification theorem, which the DFS route tests elsewhere
        auto splits = enumerate_splittings(g, guards);
        auto subs = enumerate_subgroups(g, guards);
        std::map<std::vector<unsigned long long>, GroupSubset> dedup;
        Subgroup trivK{GroupSubset(g), {}};
        for (const auto& s : splits) {
            GroupSubset zero = build_family(g, s, FamilyKind::Zero, trivK);
            dedup.emplace(zero.words(), zero);
            for (const auto& K : subs) {
                if (!K.set.subset_of(s.H.set)) continue;
                for (FamilyKind kind : {FamilyKind::I, FamilyKind::II}) {
                    GroupSubset fam = build_family(g, s, kind, K);
                    dedup.emplace(fam.words(), fam);
                }
            }
        }
        for (auto& [w, s] : dedup) {
            (void)w;
            sets.push_back(s);
        }
        provenance = "constructive";
    }
    auto gens = automorphism_generators(g, guards);
    OrbitReport rep = orbit_partition(sets, gens);
    rep.provenance = provenance;
    return rep;
}

OrbitReport orbit_count_subgroups(const FinAbGroup& h, const Guards& guards) {
    auto subs = enumerate_subgroups(h, guards);
    std::vector<GroupSubset> sets;
    sets.reserve(subs.size());
    for (auto& s : subs) sets.push_back(s.set);
    auto gens = automorphism_generators(h, guards);
    OrbitReport rep = orbit_partition(sets, gens);
    rep.provenance = "subgroups";
    return rep;
}

bool rorb_check(const FinAbGroup& g, const Guards& guards) {
    OrbitReport lhs = orbit_count_extremal(g, guards);
    auto splits = enumerate_splittings(g, guards);
    if (splits.empty()) throw TheoremViolation("no splitting found");
    FinAbGroup h = splits.front().H.as_group();
    OrbitReport rhs = orbit_count_subgroups(h, guards);
    long long eps = g.exponent() == 7 ? 0 : 1;
    return lhs.orbit_count == 2 * rhs.orbit_count + eps;
}

long long orbi_formula(long long m, long long r) {
    if (m < 7 || m % 6 != 1) throw std::invalid_argument("m must be a type III modulus");
    long long prod = 1;
    long long rest = m;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        long long v = 0;
        while (rest % p == 0) { rest /= p; ++v; }
        // binom(v + r, r)
        long long b = 1;
        for (long long i = 1; i <= r; ++i) b = b * (v + i) / i;
        prod *= b;
    }
    if (rest > 1) {
        long long b = 1;
        for (long long i = 1; i <= r; ++i) b = b * (1 + i) / i;
        prod *= b;
    }
    return 2 * prod + (m == 7 ? 0 : 1);
}

long long subgroup_iso_class_count(long long p, long long t, long long r) {
    if (p < 2 || t < 0 || r < 0) throw std::invalid_argument("bad homogeneous parameters");
    (void)p;
    long long b = 1;
    for (long long i = 1; i <= r; ++i) b = b * (t + i) / i;
    return b;
}

bool homogeneous_transitivity_check(const FinAbGroup& hp, const Guards& guards) {
    auto& f = hp.invariant_factors();
    for (auto v : f)
        if (v != f[0]) throw std::invalid_argument("group is not homogeneous");
    auto subs = enumerate_subgroups(hp, guards);
    auto gens = automorphism_generators(hp, guards);
    std::map<std::vector<unsigned long long>, int> index;
    for (size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i].set.words(), (int)i);
    UnionFind uf((int)subs.size());
    for (const auto& p : gens)
        for (size_t i = 0; i < subs.size(); ++i)
            uf.unite((int)i, index.at(apply_perm(p, subs[i].set).words()));
    // orbits must coincide with isomorphism classes of the subgroups
    std::map<std::vector<long long>, std::set<int>> roots_by_type;
    std::set<int> roots;
    for (size_t i = 0; i < subs.size(); ++i) {
        roots_by_type[subs[i].invariant_factors].insert(uf.find((int)i));
        roots.insert(uf.find((int)i));
    }
    for (auto& [type, tr] : roots_by_type) {
        (void)type;
        if (tr.size() != 1) return false;  // isomorphic subgroups in distinct orbits
    }
    // distinct types cannot share an orbit, so the counts must agree
    return roots_by_type.size() == roots.size();
}

bool cyclic_orbit_separation_check(long long m) {
    if (m < 7 || m % 6 != 1) throw std::invalid_argument("m must be a type III modulus");
    FinAbGroup g = FinAbGroup::make({m});
    long long k = (m - 1) / 6;
    GroupSubset c0(g), c1(g), c2(g);
    for (long long x = 2 * k + 1; x <= 4 * k; ++x) c0.insert((Elem)x);
    for (long long x = 2 * k; x <= 4 * k - 1; ++x) c1.insert((Elem)x);
    c2.insert((Elem)(2 * k));
    c2.insert((Elem)(4 * k + 1));
    for (long long x = 2 * k + 2; x <= 4 * k - 1; ++x) c2.insert((Elem)x);

    auto same_orbit = [&](const GroupSubset& a, const GroupSubset& b) {
        for (long long d = 1; d < m; ++d) {
            if (std::gcd(d, m) != 1) continue;
            if (a.dilated(d) == b) return true;
        }
        return false;
    };
    bool sym_ok = c0.negated() == c0 && c2.negated() == c2 && c1.negated() != c1;
    if (!sym_ok) return false;
    if (m == 7) return same_orbit(c2, c0) && !same_orbit(c1, c0);
    return !same_orbit(c0, c1) && !same_orbit(c0, c2) && !same_orbit(c1, c2);
}

}  // namespace sumfree
