#include "sumfree/classify.hpp"

#include <algorithm>
#include <numeric>

#include "sumfree/matching.hpp"
#include "sumfree/sumfree_ops.hpp"

namespace sumfree {

namespace {

long long type3_k(const FinAbGroup& g) {
    if (group_type(g).type != GroupType::III)
        throw std::invalid_argument("operation needs a type III group");
    return (g.exponent() - 1) / 6;
}

// B + f([lo,hi]) для a splitting, i.e. the union of layers lo..hi over B
void add_layers(const FinAbGroup& g, GroupSubset& out, const std::vector<Elem>& b,
                Elem gen, long long lo, long long hi) {
    long long m = g.exponent();
    for (long long c = lo; c <= hi; ++c) {
        Elem off = g.scale(c % m, gen);
        for (Elem h : b) out.insert(g.add(h, off));
    }
}

}  // namespace

const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Zero: return "ZERO";
        case FamilyKind::I:    return "I";
        default:               return "II";
    }
}

GroupSubset build_family(const FinAbGroup& g, const Splitting& s, FamilyKind kind,
                         const Subgroup& K) {
    long long k = type3_k(g);
    if (kind != FamilyKind::Zero && !K.set.subset_of(s.H.set))
        throw std::invalid_argument("K must be a subgroup of H");
    auto h = s.H.set.elements();
    GroupSubset out(g);
    if (kind == FamilyKind::Zero) {
        add_layers(g, out, h, s.gen, 2 * k + 1, 4 * k);
        return out;
    }
    auto ks = K.set.elements();
    auto kc = s.H.set.set_minus(K.set).elements();
    if (kind == FamilyKind::I) {
        add_layers(g, out, ks, s.gen, 2 * k, 2 * k);
        add_layers(g, out, kc, s.gen, 4 * k, 4 * k);
        add_layers(g, out, h, s.gen, 2 * k + 1, 4 * k - 1);
    } else {
        add_layers(g, out, ks, s.gen, 2 * k, 2 * k);
        add_layers(g, out, ks, s.gen, 4 * k + 1, 4 * k + 1);
        add_layers(g, out, kc, s.gen, 4 * k, 4 * k);
        add_layers(g, out, kc, s.gen, 2 * k + 1, 2 * k + 1);
        add_layers(g, out, h, s.gen, 2 * k + 2, 4 * k - 1);
    }
    return out;
}

std::array<GroupSubset, 3> cyclic_families(long long m) {
    FinAbGroup g = FinAbGroup::make({m});
    long long k = type3_k(g);
    GroupSubset f1(g), f2(g), f3(g);
    for (long long x = 2 * k + 1; x <= 4 * k; ++x) f1.insert((Elem)x);
    f2.insert((Elem)(2 * k));
    f2.insert((Elem)(4 * k + 1));
    for (long long x = 2 * k + 2; x <= 4 * k - 1; ++x) f2.insert((Elem)x);
    for (long long x = 2 * k; x <= 4 * k - 1; ++x) f3.insert((Elem)x);
    return {f1, f2, f3};
}

std::optional<CyclicClass> classify_cyclic_extremal(const GroupSubset& e) {
    const FinAbGroup& g = e.group();
    if (g.rank() != 1) throw std::invalid_argument("cyclic classification needs a cyclic group");
    long long m = g.exponent();
    long long k = type3_k(g);
    if (e.size() != 2 * k)
        throw std::invalid_argument("set has size " + std::to_string(e.size()) +
                                    ", expected 2k = " + std::to_string(2 * k));
    if (!is_sum_free(e)) throw std::invalid_argument("set is not sum-free");
    auto fams = cyclic_families(m);
    for (long long d = 1; d < m; ++d) {
        if (std::gcd(d, m) != 1) continue;
        GroupSubset de = e.dilated(d);
        for (int fi = 0; fi < 3; ++fi)
            if (de == fams[fi]) return CyclicClass{d, fi + 1};
    }
    return std::nullopt;
}

namespace {

// match L against one family shape for a fixed splitting; the subgroup K is
// read off the 2k-layer, so no search over K is needed
bool matches_presentation(const FinAbGroup& g, const GroupSubset& l, const Splitting& s,
                          FamilyKind kind, Subgroup* k_out,
                          const std::vector<Subgroup>& subs_of_H) {
    long long k = type3_k(g);
    if (kind == FamilyKind::Zero)
        return l == build_family(g, s, FamilyKind::Zero, Subgroup{GroupSubset(g), {}});
    // K candidate = elements h of H with h + f(2k) in L
    GroupSubset kset(g);
    Elem off = g.scale(2 * k, s.gen);
    for (Elem h : s.H.set.elements())
        if (l.contains(g.add(h, off))) kset.insert(h);
    for (const auto& K : subs_of_H) {
        if (K.set == kset) {
            if (l == build_family(g, s, kind, K)) {
                *k_out = K;
                return true;
            }
            return false;
        }
    }
    return false;  // 2k-layer is not a subgroup
}

}  // namespace

PresentationResult presentation_of(const GroupSubset& l, const Guards& guards) {
    const FinAbGroup& g = l.group();
    long long k = type3_k(g);
    long long c = 2 * k * (g.order() / g.exponent());
    if (l.size() != c || !is_sum_free(l)) return {PresentationStatus::NotExtremal, std::nullopt};
    auto splits = enumerate_splittings(g, guards);
    auto subs = enumerate_subgroups(g, guards);
    for (const auto& s : splits) {
        std::vector<Subgroup> subs_of_H;
        for (const auto& K : subs)
            if (K.set.subset_of(s.H.set)) subs_of_H.push_back(K);
        for (FamilyKind kind : {FamilyKind::Zero, FamilyKind::I, FamilyKind::II}) {
            Subgroup K{GroupSubset(g), {}};
            if (matches_presentation(g, l, s, kind, &K, subs_of_H))
                return {PresentationStatus::Found, Presentation{kind, s, K}};
        }
    }
    return {PresentationStatus::Violation, std::nullopt};
}

AlphaProfile alpha_profile(const GroupSubset& a, const CyclicHom& f) {
    auto lay = layers(a, f);  // validates surjectivity
    AlphaProfile out;
    out.q = f.modulus;
    long long n = a.group().order();
    for (long long i = 0; i < f.modulus; ++i)
        out.alpha.push_back(Rational(lay.at(i).size() * f.modulus, n));
    return out;
}

GroupSubset heavy_layers(const GroupSubset& a, const CyclicHom& f) {
    AlphaProfile prof = alpha_profile(a, f);
    FinAbGroup zq = FinAbGroup::make({f.modulus});
    GroupSubset c(zq);
    Rational half(1, 2);
    for (long long i = 0; i < f.modulus; ++i)
        if (half < prof.alpha[i]) c.insert((Elem)i);
    return c;
}

// ---------------------------------------------------------------------------
// recover_structure

namespace {

struct EdgeCoset {
    Subgroup K;
    Elem x = 0;       // A_i is contained in K + x
    bool coset_law = true;  // A_i + A_i = K + 2x held
};

// Kneser-style structure of one heavy edge layer: K = stabilizer of
// A_i + A_i inside H, x = a representative with A_i in K + x.
std::optional<EdgeCoset> edge_coset(const FinAbGroup& g, const GroupSubset& ai,
                                    const GroupSubset& hset) {
    if (ai.empty()) return std::nullopt;
    GroupSubset ss = ai.sum_with(ai);
    Subgroup stab_g = stabilizer(ss);
    // stabilizer within H
    GroupSubset kset = stab_g.set.set_intersect(hset);
    Subgroup K{kset, subgroup_invariant_factors(kset)};
    Elem x = ai.elements().front();
    if (!ai.subset_of(K.set.translated(x))) return std::nullopt;
    EdgeCoset out{K, x, ss == K.set.translated(g.add(x, x))};
    return out;
}

Splitting rebase_splitting(const FinAbGroup& g, const Splitting& s, long long k, Elem x) {
    // new f with f(2k) = f'(2k) + x: since gcd(2k, m) = 1 the new generator
    // is gen + (2k)^{-1} x
    long long m = g.exponent();
    long long inv = 1;
    for (long long d = 1; d < m; ++d)
        if (2 * k % m * d % m == 1) { inv = d; break; }
    Elem gen2 = g.add(s.gen, g.scale(inv, x));
    return Splitting{s.H, gen2};
}

Splitting flip_splitting(const FinAbGroup& g, const Splitting& s) {
    return Splitting{s.H, g.neg(s.gen)};
}

}  // namespace

RecoveryResult recover_structure(const GroupSubset& a, const RecoveryParams& params,
                                 const Guards& guards) {
    const FinAbGroup& g = a.group();
    long long n = g.order();
    if (n > guards.max_structural_order)
        throw GuardExceeded("recovery refused for order " + std::to_string(n));
    long long m = g.exponent();
    long long k = type3_k(g);
    long long c = c_of_G(g);
    if (!is_sum_free(a)) throw std::invalid_argument("recovery needs a sum-free set");
    Rational eps = Rational(c - a.size(), n);
    if (params.epsilon_given && params.epsilon != eps)
        throw std::invalid_argument("supplied epsilon " + params.epsilon.str() +
                                    " does not match (c(G)-|A|)/n = " + eps.str());
    bool strict_ok = eps < Rational(1, 6 * m) && eps.less_than_pow10(1, 23);
    if (params.strict_mode && !strict_ok)
        throw std::invalid_argument("epsilon " + eps.str() +
                                    " violates the strict threshold min(1/6m, 10^-23)");

    // locate a surjection f and unit twist d with A inside (d f)^{-1}[2k,4k+1];
    // exhaustive scan in lex order of (f images, d) keeps the result
    // deterministic
    auto surjections = enumerate_surjections_to_cyclic(g, m);
    std::optional<CyclicHom> found;
    for (const auto& f : surjections) {
        auto table = f.value_table(g);
        for (long long d = 1; d < m && !found; ++d) {
            if (std::gcd(d, m) != 1) continue;
            bool inside = true;
            for (Elem x : a.elements()) {
                long long v = d * table[x] % m;
                if (v < 2 * k || v > 4 * k + 1) { inside = false; break; }
            }
            if (inside) {
                CyclicHom df = f;
                for (auto& im : df.images) im = d * im % m;
                found = df;
            }
        }
        if (found) break;
    }
    if (!found)
        throw std::invalid_argument(
            "no surjection places the set inside the window [2k,4k+1]; "
            "the set is too far from extremal (epsilon = " + eps.str() + ")");

    Splitting base = splitting_from_surjection(g, *found);

    // edge layers as subsets of H (layer i holds h with h + f(i) gen in A)
    auto layer_of = [&](const Splitting& s, long long i) {
        GroupSubset out(g);
        Elem off = g.scale(i, s.gen);
        for (Elem h : s.H.set.elements())
            if (a.contains(g.add(h, off))) out.insert(h);
        return out;
    };
    GroupSubset a2k = layer_of(base, 2 * k);
    GroupSubset a4k1 = layer_of(base, 4 * k + 1);

    Rational two_eps_n = eps * Rational(2 * n);
    bool heavy_lo = Rational(a2k.size()) > two_eps_n;
    bool heavy_hi = Rational(a4k1.size()) > two_eps_n;
    int paper_case = heavy_lo ? (heavy_hi ? 4 : 2) : (heavy_hi ? 3 : 1);

    // candidate presentations; the paper's threshold case is always among
    // them, the rest only ever lower the excess
    struct Cand {
        Presentation pres;
        GroupSubset fam;
        long long excess;
        int order;
    };
    std::vector<Cand> cands;
    Subgroup trivK{GroupSubset(g), {}};
    auto push = [&](FamilyKind kind, const Splitting& s, const Subgroup& K, int ord) {
        GroupSubset fam = build_family(g, s, kind, K);
        if (fam.size() != c || !is_sum_free(fam))
            throw TheoremViolation("constructed family is not extremal sum-free");
        long long excess = a.set_minus(fam).size();
        cands.push_back({Presentation{kind, s, K}, fam, excess, ord});
    };
    push(FamilyKind::Zero, base, trivK, 0);
    if (auto ec = edge_coset(g, a2k, base.H.set)) {
        Splitting s1 = rebase_splitting(g, base, k, ec->x);
        push(FamilyKind::I, s1, ec->K, 1);
        // shared-subgroup kind II needs A_{4k+1} inside K - x
        if (a4k1.subset_of(ec->K.set.translated(g.neg(ec->x))))
            push(FamilyKind::II, s1, ec->K, 3);
    }
    if (auto ec = edge_coset(g, a4k1, base.H.set)) {
        // mirror case through -f'
        Splitting flipped = flip_splitting(g, base);
        Splitting s2 = rebase_splitting(g, flipped, k, ec->x);
        push(FamilyKind::I, s2, ec->K, 2);
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& r) {
        if (l.excess != r.excess) return l.excess < r.excess;
        return l.order < r.order;
    });
    const Cand& best = cands.front();
    return {best.pres, best.fam, best.excess, eps, !strict_ok, paper_case};
}

// ---------------------------------------------------------------------------

std::vector<std::pair<Elem, Elem>> disjoint_pair_cover(Elem x, const GroupSubset& l) {
    const FinAbGroup& g = l.group();
    auto elems = l.elements();
    int nl = (int)elems.size();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < nl; ++i)
        for (int j = i + 1; j < nl; ++j) {
            Elem s = g.add(elems[i], elems[j]);
            Elem d1 = g.sub(elems[i], elems[j]);
            Elem d2 = g.sub(elems[j], elems[i]);
            if (s == x || d1 == x || d2 == x) edges.push_back({i, j});
        }
    std::vector<int> mate;
    max_matching(nl, edges, &mate);
    std::vector<std::pair<Elem, Elem>> out;
    for (int i = 0; i < nl; ++i)
        if (mate[i] > i) out.push_back({elems[i], elems[mate[i]]});
    return out;
}

WindowCensusReport window_census(const FinAbGroup& g, const Guards& guards) {
    if (g.order() > guards.max_census_order)
        throw GuardExceeded("window census refused for order " + std::to_string(g.order()));
    detail::SfKernel kernel(g);
    long long k = type3_k(g);
    auto splits = enumerate_splittings(g, guards);
    std::vector<unsigned long long> windows;
    for (const auto& s : splits) {
        GroupSubset w(g);
        for (long long cc = 2 * k; cc <= 4 * k + 1; ++cc) {
            Elem off = g.scale(cc, s.gen);
            for (Elem h : s.H.set.elements()) w.insert(g.add(h, off));
        }
        windows.push_back(w.mask64());
    }
    std::sort(windows.begin(), windows.end());
    windows.erase(std::unique(windows.begin(), windows.end()), windows.end());
    WindowCensusReport rep;
    kernel.enumerate(kernel.full_mask(), [&](unsigned long long mask, int) {
        ++rep.total;
        for (auto w : windows)
            if ((mask & ~w) == 0) {
                ++rep.covered;
                return;
            }
    });
    rep.exceptions = rep.total - rep.covered;
    rep.exception_fraction = Rational(rep.exceptions, rep.total);
    return rep;
}

}  // namespace sumfree
