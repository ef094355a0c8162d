#pragma once

#include <string>
#include <vector>

#include "sumfree/group.hpp"

namespace sumfree {

struct OrbitReport {
    long long acted_size = 0;
    long long orbit_count = 0;
    std::vector<long long> orbit_sizes;          // sorted ascending
    std::vector<GroupSubset> representatives;    // lex-least member per orbit
    std::string provenance;                      // "dfs" or "constructive"
};

// Orbits of Aut(G) on the extremal sum-free sets.  The acted set comes from
// the exhaustive DFS when the guard allows, otherwise from the family
// constructions over all splittings and subgroups (flagged in provenance).
OrbitReport orbit_count_extremal(const FinAbGroup& g, const Guards& guards = default_guards());

// Orbits of Aut(H) on the subgroup list of H.
OrbitReport orbit_count_subgroups(const FinAbGroup& h, const Guards& guards = default_guards());

// Card(L(G)/Aut(G)) == 2 Card(R(H)/Aut(H)) + eps, eps = 0 iff m = 7.
bool rorb_check(const FinAbGroup& g, const Guards& guards = default_guards());

// 2 prod_{p | m} binom(v_p(m) + r, r) + eps(m) for (Z/mZ)^{r+1}.
long long orbi_formula(long long m, long long r);

// binom(t + r, r): isomorphism classes of subgroups of a homogeneous
// p-group of height t and rank r.
long long subgroup_iso_class_count(long long p, long long t, long long r);

// Aut-orbits of subgroups coincide with isomorphism classes on a
// homogeneous p-group.
bool homogeneous_transitivity_check(const FinAbGroup& hp,
                                    const Guards& guards = default_guards());

// For m != 7 the three cyclic representatives C0, C1, C2 lie in distinct
// dilation orbits; for m = 7, C0 and C2 fuse while C1 stays separate.
bool cyclic_orbit_separation_check(long long m);

// Orbit partition of an explicit family of subsets under permutations.
// Exposed for the generator-set-independence property tests.
OrbitReport orbit_partition(const std::vector<GroupSubset>& sets,
                            const std::vector<Perm>& gens);

}  // namespace sumfree
