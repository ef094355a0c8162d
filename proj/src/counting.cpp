#include "sumfree/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "sumfree/classify.hpp"
#include "sumfree/sumfree_ops.hpp"

namespace sumfree {

long long DoublingTable::total() const {
    long long s = 0;
    for (auto& [k, v] : entries) {
        (void)k;
        s += v;
    }
    return s;
}

namespace {

void check_doubling_guard(const FinAbGroup& h, long long t, const Guards& guards) {
    if (t < 2) throw std::invalid_argument("doubling needs t >= 2");
    if (h.order() > guards.max_doubling_bits)
        throw GuardExceeded("doubling scan refused for order " + std::to_string(h.order()));
}

// |tB| for the subset with the given bit mask, via the flat addition table
int tfold_size(const std::vector<int>& addt, int n, unsigned long long bmask, long long t) {
    unsigned long long cur = bmask;
    for (long long step = 1; step < t; ++step) {
        unsigned long long next = 0;
        unsigned long long rest = cur;
        while (rest) {
            int x = __builtin_ctzll(rest);
            rest &= rest - 1;
            const int* row = addt.data() + x * n;
            unsigned long long b = bmask;
            while (b) {
                int y = __builtin_ctzll(b);
                b &= b - 1;
                next |= 1ull << row[y];
            }
        }
        cur = next;
    }
    return __builtin_popcountll(cur);
}

struct ScanContext {
    int n;
    std::vector<int> addt;
};

ScanContext make_scan(const FinAbGroup& h) {
    ScanContext ctx;
    ctx.n = (int)h.order();
    ctx.addt.resize(ctx.n * ctx.n);
    for (int a = 0; a < ctx.n; ++a)
        for (int b = 0; b < ctx.n; ++b) ctx.addt[a * ctx.n + b] = h.add(a, b);
    return ctx;
}

}  // namespace

DoublingTable doubling_table(const FinAbGroup& h, long long t, const Guards& guards) {
    check_doubling_guard(h, t, guards);
    auto ctx = make_scan(h);
    int workers = std::max(1, guards.workers);
    unsigned long long total = 1ull << ctx.n;
    std::vector<std::map<std::pair<long long, long long>, long long>> partial(workers);
    auto work = [&](int w) {
        // partition by residue of the mask so partial tables merge additively
        for (unsigned long long mask = 1 + w; mask < total; mask += workers) {
            int k1 = __builtin_popcountll(mask);
            int k2 = tfold_size(ctx.addt, ctx.n, mask, t);
            ++partial[w][{k1, k2}];
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    DoublingTable out;
    out.t = t;
    for (auto& p : partial)
        for (auto& [key, cnt] : p) out.entries[key] += cnt;
    return out;
}

Dyadic a_of_H(const FinAbGroup& h, long long t, const Guards& guards) {
    DoublingTable tab = doubling_table(h, t, guards);
    Dyadic acc;
    for (auto& [key, cnt] : tab.entries)
        acc = acc + Dyadic(cnt).times_pow2(-key.second);
    return acc;
}

Dyadic a_of_H_direct(const FinAbGroup& h, long long t, const Guards& guards) {
    check_doubling_guard(h, t, guards);
    auto ctx = make_scan(h);
    unsigned long long total = 1ull << ctx.n;
    // common denominator 2^n: accumulate integer sum of 2^{n-k2}
    __int128 num = 0;
    for (unsigned long long mask = 1; mask < total; ++mask) {
        int k2 = tfold_size(ctx.addt, ctx.n, mask, t);
        num += (__int128)1 << (ctx.n - k2);
    }
    Dyadic acc;
    // fold in word-sized chunks to stay inside the 64-bit dyadic type
    int shift = 0;
    while (num) {
        long long chunk = (long long)(num & 0xffffffffll);
        if (chunk) acc = acc + Dyadic(chunk).times_pow2(shift - ctx.n);
        num >>= 32;
        shift += 32;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// window counts

namespace {

long long type3_k_of(const FinAbGroup& g) {
    if (group_type(g).type != GroupType::III)
        throw std::invalid_argument("window counts need a type III group");
    return (g.exponent() - 1) / 6;
}

GroupSubset window_of(const FinAbGroup& g, const Splitting& s, long long lo, long long hi) {
    GroupSubset w(g);
    for (long long c = lo; c <= hi; ++c) {
        Elem off = g.scale(c, s.gen);
        for (Elem h : s.H.set.elements()) w.insert(g.add(h, off));
    }
    return w;
}

}  // namespace

WindowCountReport window_count_identity(const FinAbGroup& g, const Splitting& s,
                                        const Guards& guards) {
    long long k = type3_k_of(g);
    long long hsize = s.H.order();
    long long wsize = (2 * k + 1) * hsize;
    if (wsize > guards.max_window_elements)
        throw GuardExceeded("window of " + std::to_string(wsize) + " elements exceeds guard");
    WindowCountReport rep;

    // route 1: structure-blind DFS over the window
    detail::SfKernel kernel(g);
    GroupSubset w = window_of(g, s, 2 * k, 4 * k);
    rep.dfs_count = kernel.count(w.mask64(), std::max(1, guards.workers));

    // route 2: layer-by-layer count; only A_{4k} is constrained, through
    // H \ (A_{2k} + A_{2k}), and the 2k-1 middle layers are free
    FinAbGroup habs = s.H.as_group();
    long long free_layers_weight = (2 * k - 1) * hsize;
    auto ctx = make_scan(habs);
    unsigned long long total = 1ull << ctx.n;
    long long layered = 0;
    for (unsigned long long mask = 0; mask < total; ++mask) {
        int k2 = mask ? tfold_size(ctx.addt, ctx.n, mask, 2) : 0;
        layered += 1ll << (ctx.n - k2);
    }
    layered <<= free_layers_weight;
    rep.layered_count = layered;

    rep.a_H = a_of_H(habs, 2, guards);
    long long c = c_of_G(g);
    Dyadic closed = (Dyadic(1) + rep.a_H).times_pow2(c);
    rep.closed_form = closed.as_integer();
    rep.paper_literal = rep.a_H.times_pow2(c).as_integer();
    rep.matches = rep.dfs_count == rep.layered_count && rep.dfs_count == rep.closed_form;
    return rep;
}

EdgeWindowCensus edge_window_census(const FinAbGroup& g, const Splitting& s,
                                    const Guards& guards) {
    long long k = type3_k_of(g);
    detail::SfKernel kernel(g);
    GroupSubset w2 = window_of(g, s, 2 * k, 4 * k + 1);
    GroupSubset lo = window_of(g, s, 2 * k, 2 * k);
    GroupSubset hi = window_of(g, s, 4 * k + 1, 4 * k + 1);
    if (w2.size() > guards.max_window_elements + s.H.order())
        throw GuardExceeded("edge window too large");
    unsigned long long lomask = lo.mask64(), himask = hi.mask64();
    EdgeWindowCensus rep;
    kernel.enumerate(w2.mask64(), [&](unsigned long long mask, int) {
        ++rep.total;
        if ((mask & lomask) && (mask & himask)) ++rep.both_edges_nonempty;
    });
    Dyadic a = a_of_H(s.H.as_group(), 2, guards);
    rep.doubling_bound = (a * a).times_pow2(c_of_G(g)).as_integer();
    rep.refined_ok = rep.both_edges_nonempty <= rep.doubling_bound;
    rep.literal_ok = rep.total <= rep.doubling_bound;
    return rep;
}

SfBounds sf_bounds(const FinAbGroup& g, const Guards& guards) {
    auto splits = enumerate_splittings(g, guards);
    if (splits.empty()) throw std::invalid_argument("no splitting available");
    FinAbGroup h = splits.front().H.as_group();
    SfBounds out;
    out.c = c_of_G(g);
    out.a_H = a_of_H(h, 2, guards);
    out.lower = out.a_H.times_pow2(out.c).as_integer();
    long long n = g.order();
    out.upper_mantissa = Dyadic(n * n) * out.a_H * out.a_H;
    if (g.order() <= guards.max_census_order) {
        out.census = count_all_sumfree(g, guards);
        out.lower_ok = out.lower <= *out.census;
    }
    return out;
}

// ---------------------------------------------------------------------------
// bound calculators

long long omega(long long n) {
    long long cnt = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        ++cnt;
        while (n % p == 0) n /= p;
    }
    if (n > 1) ++cnt;
    return cnt;
}

namespace {

double log2_binom(long long n, long long k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    double s = 0;
    for (long long i = 0; i < k; ++i) s += std::log2((double)(n - i)) - std::log2((double)(i + 1));
    return s;
}

}  // namespace

BoundValue smallG_bound(long long k1, long long k2, long long n, double c) {
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("k1, k2 must be >= 1");
    double l2k1 = std::log2((double)k1);
    double front = 4.0 * (double)k2 * l2k1 / (double)k1 * std::log2((double)n);
    double lnk1 = std::log((double)k1);
    double t1 = c * (double)omega(n) * std::cbrt((double)k1 * (double)k2 * lnk1) * l2k1 +
                log2_binom(k2, k1 - 1) + std::log2((double)(k1 * k1 * k1 + 1));
    double t2 = 4.0 * (double)k1 * l2k1;
    double log2v = front + std::min(t1, t2);
    return {log2v, std::exp2(log2v)};
}

BoundValue coun_bound(long long n, long long m, double c_m) {
    if (m % 6 != 1 || n % m != 0)
        throw std::invalid_argument("need a type III order/exponent pair");
    long long k = (m - 1) / 6;
    long long cg = 2 * k * (n / m);
    double ln = std::log((double)n);
    double log2v = (double)cg + c_m * std::pow((double)n, 2.0 / 3.0) * std::pow(ln, 4.0 / 3.0);
    return {log2v, std::exp2(log2v)};
}

BoundValue bah_bound(long long n, long long m, double c) {
    double ln = std::log((double)n);
    double log2v = c * (double)omega(m) * std::pow((double)n, 2.0 / 3.0) *
                   std::cbrt(ln) * std::log2((double)n);
    return {log2v, std::exp2(log2v)};
}

TFreeLowerBound t_free_lower_bound(const FinAbGroup& g, long long t, const Guards& guards) {
    if (t < 2) throw std::invalid_argument("t-free bound needs t >= 2");
    auto splits = enumerate_splittings(g, guards);
    if (splits.empty()) throw std::invalid_argument("no splitting available");
    FinAbGroup h = splits.front().H.as_group();
    TFreeLowerBound out;
    out.mantissa = a_of_H(h, t, guards);
    out.exponent = nu_t(g, t);
    try {
        Dyadic v = out.mantissa.times_pow2(out.exponent);
        if (v.is_integer()) out.value = v.as_integer();
    } catch (const std::overflow_error&) {
        // mantissa * 2^exponent stays symbolic when it does not fit
    }
    return out;
}

}  // namespace sumfree
