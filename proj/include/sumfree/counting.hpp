#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sumfree/group.hpp"
#include "sumfree/rational.hpp"

namespace sumfree {

// S(t,k1,k2,H): subsets B of H with |B| = k1 and |tB| = k2, tB the t-fold
// sumset B + ... + B.
struct DoublingTable {
    long long t = 2;
    std::map<std::pair<long long, long long>, long long> entries;
    long long total() const;
};

DoublingTable doubling_table(const FinAbGroup& h, long long t,
                             const Guards& guards = default_guards());

// a(t,H) = sum_{k1,k2 >= 1} S(t,k1,k2,H) / 2^{k2}, exact dyadic, via the table.
Dyadic a_of_H(const FinAbGroup& h, long long t = 2, const Guards& guards = default_guards());

// Same value by a direct streaming sum over subsets, independent of the
// table; the two must agree exactly.
Dyadic a_of_H_direct(const FinAbGroup& h, long long t = 2,
                     const Guards& guards = default_guards());

struct WindowCountReport {
    long long dfs_count = 0;       // structure-blind DFS over the window
    long long layered_count = 0;   // choose A_{2k}, free middles, bounded A_{4k}
    long long closed_form = 0;     // (1 + a(H)) 2^{c(G)}
    long long paper_literal = 0;   // a(H) 2^{c(G)}, reported only
    Dyadic a_H;
    bool matches = false;          // dfs == layered == closed form
};

// Exact count of sum-free subsets of (H, [2k,4k]_m) by two independent
// methods, checked against the closed form.
WindowCountReport window_count_identity(const FinAbGroup& g, const Splitting& s,
                                        const Guards& guards = default_guards());

struct SfBounds {
    long long c = 0;
    Dyadic a_H;
    long long lower = 0;            // a(H) 2^{c(G)}
    Dyadic upper_mantissa;          // n^2 a(H)^2; upper = mantissa * 2^{c}
    std::optional<long long> census;  // |SF(G)| when exactly computable
    bool lower_ok = true;           // lower <= census when census present
};

SfBounds sf_bounds(const FinAbGroup& g, const Guards& guards = default_guards());

// Census of sum-free sets inside the edge window (H,[2k,4k+1]_m): the total
// and the count with both edge layers nonempty (the population the doubling
// bound a(H)^2 2^{c(G)} actually covers).
struct EdgeWindowCensus {
    long long total = 0;
    long long both_edges_nonempty = 0;
    long long doubling_bound = 0;  // a(H)^2 2^{c(G)}
    bool refined_ok = false;       // both_edges_nonempty <= doubling_bound
    bool literal_ok = false;       // total <= doubling_bound (fails for small H)
};

EdgeWindowCensus edge_window_census(const FinAbGroup& g, const Splitting& s,
                                    const Guards& guards = default_guards());

struct BoundValue {
    double log2_value = 0;
    double value = 0;  // may be inf when the exponent overflows
};

// n^{4 k2 log2(k1)/k1} min(k1^{c w(n) (k1 k2 ln k1)^{1/3}} binom(k2,k1-1)
// (k1^3+1), k1^{4 k1}); calculator only.
BoundValue smallG_bound(long long k1, long long k2, long long n, double c);

// 2^{c(G) + c_m n^{2/3} (log n)^{4/3}} for a type III group of order n and
// exponent m; calculator only.
BoundValue coun_bound(long long n, long long m, double c_m);

// n^{c w(m) n^{2/3} (ln n)^{1/3}}, the a(H) upper bound; calculator only.
BoundValue bah_bound(long long n, long long m, double c);

// a(t,H) 2^{nu_t(G)} with exact dyadic mantissa; value filled in when it
// fits in 64 bits.
struct TFreeLowerBound {
    Dyadic mantissa;
    long long exponent = 0;  // nu_t(G)
    std::optional<long long> value;
};

TFreeLowerBound t_free_lower_bound(const FinAbGroup& g, long long t,
                                   const Guards& guards = default_guards());

long long omega(long long n);  // number of distinct prime divisors

}  // namespace sumfree
