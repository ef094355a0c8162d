#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sumfree/group.hpp"
#include "sumfree/rational.hpp"

namespace sumfree {

// The three extremal families.  With k = (m-1)/6 and K <= H:
//   Zero: (H, [2k+1,4k]_m)
//   I:    (K,{2k}) u (K^c,{4k}) u (H,[2k+1,4k-1])
//   II:   (K,{2k}) u (K,{4k+1}) u (K^c,{4k}) u (K^c,{2k+1}) u (H,[2k+2,4k-1])
enum class FamilyKind { Zero, I, II };

const char* family_kind_name(FamilyKind k);

// Certificate that a set is extremal: which family, for which splitting and
// subgroup K of H (K is ignored for kind Zero).
struct Presentation {
    FamilyKind kind = FamilyKind::Zero;
    Splitting split;
    Subgroup K;
};

// Constructs the family member; requires a type III group and K <= H.
GroupSubset build_family(const FinAbGroup& g, const Splitting& s, FamilyKind kind,
                         const Subgroup& K);

// The three cyclic families in Z/mZ: [2k+1,4k], {2k,4k+1} u [2k+2,4k-1],
// [2k,4k-1].
std::array<GroupSubset, 3> cyclic_families(long long m);

struct CyclicClass {
    long long unit = 1;  // least d with d.E equal to a family
    int family = 0;      // 1-based family index
};

// Finds (d, family) with d.E one of the three cyclic families; nullopt means
// the classification failed (never for genuine extremal input).
std::optional<CyclicClass> classify_cyclic_extremal(const GroupSubset& e);

enum class PresentationStatus {
    Found,        // L is one of the families for some splitting
    NotExtremal,  // L is not sum-free of size c(G); no presentation expected
    Violation     // L is extremal but no presentation exists
};

struct PresentationResult {
    PresentationStatus status = PresentationStatus::NotExtremal;
    std::optional<Presentation> pres;
};

// Searches all splittings (and all K <= H) for a matching presentation.
PresentationResult presentation_of(const GroupSubset& l,
                                   const Guards& guards = default_guards());

// alpha_i = |A_i| q / n, exact.
struct AlphaProfile {
    long long q = 1;
    std::vector<Rational> alpha;
};

AlphaProfile alpha_profile(const GroupSubset& a, const CyclicHom& f);

// C(A) = {i : alpha_i > 1/2}, as a subset of Z/qZ.
GroupSubset heavy_layers(const GroupSubset& a, const CyclicHom& f);

struct RecoveryParams {
    Rational epsilon{0};      // deficiency: |A| = c(G) - epsilon n
    bool epsilon_given = false;  // when false, epsilon is derived from |A|
    bool strict_mode = false;    // enforce epsilon < min(1/6m, 10^-23)
};

struct RecoveryResult {
    Presentation pres;
    GroupSubset family;     // the recovered extremal L
    long long excess = 0;   // |A \ L|
    Rational epsilon{0};
    bool heuristic = false;  // epsilon beyond the strict threshold
    int paper_case = 0;      // which of the four edge-layer cases applied
};

// Near-extremal recovery: locate an admissible surjection, split off the
// edge layers, build the candidate families (Kneser stabilizer cosets on
// heavy edges), return the one with least excess.
RecoveryResult recover_structure(const GroupSubset& a, const RecoveryParams& params,
                                 const Guards& guards = default_guards());

// R(x,L): a maximum-cardinality collection of pairwise disjoint 2-subsets
// {a,b} of L with a+b = x or a-b = +-x, via exact maximum matching.
std::vector<std::pair<Elem, Elem>> disjoint_pair_cover(Elem x, const GroupSubset& l);

struct WindowCensusReport {
    long long total = 0;       // |SF(G)|
    long long covered = 0;     // contained in (H,[2k,4k+1]_m) for some splitting
    long long exceptions = 0;
    Rational exception_fraction{0};
};

// Census of which sum-free sets live inside some splitting window.
WindowCensusReport window_census(const FinAbGroup& g, const Guards& guards = default_guards());

}  // namespace sumfree
