#include "sumfree/sumfree_ops.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <numeric>
#include <thread>

namespace sumfree {

bool is_sum_free(const GroupSubset& a) {
    const FinAbGroup& g = a.group();
    auto elems = a.elements();
    for (Elem x : elems)
        for (Elem y : elems)
            if (a.contains(g.add(x, y))) return false;
    return true;
}

SchurReport schur_report(const GroupSubset& a) {
    const FinAbGroup& g = a.group();
    auto elems = a.elements();
    SchurReport rep;
    for (Elem x : elems)
        for (Elem y : elems)
            if (a.contains(g.add(x, y))) ++rep.triple_count;

    // sum over all characters gamma of Ahat(gamma)^2 * conj(Ahat(gamma));
    // by orthogonality this equals n * triple_count
    long long n = g.order();
    int r = g.rank();
    const double tau = 2.0 * M_PI;
    std::complex<double> total = 0.0;
    auto& factors = g.invariant_factors();
    for (Elem t = 0; t < n; ++t) {
        auto tc = g.coords(t);
        std::complex<double> ahat = 0.0;
        for (Elem x : elems) {
            auto xc = g.coords(x);
            double phase = 0.0;
            for (int i = 0; i < r; ++i)
                phase += (double)(tc[i] * xc[i] % factors[i]) / (double)factors[i];
            ahat += std::polar(1.0, tau * phase);
        }
        total += ahat * ahat * std::conj(ahat);
    }
    rep.fourier_residual = std::abs(total) / (double)n;
    return rep;
}

long long c_of_G(const FinAbGroup& g) {
    long long m = g.exponent();
    Rational best(0);
    for (long long d = 1; d <= m; ++d) {
        if (m % d) continue;
        long long num = (d - 2) >= 0 ? (d - 2) / 3 : -1;  // floor((d-2)/3), d >= 1
        Rational mu(num + 1, d);
        if (best < mu) best = mu;
    }
    Rational c = best * Rational(g.order());
    return c.num();  // denominator divides n, so this is exact
}

Rational mu_of_G(const FinAbGroup& g) {
    auto t = group_type(g);
    switch (t.type) {
        case GroupType::I:  return Rational(1, 3) + Rational(1, 3 * t.p);
        case GroupType::II: return Rational(1, 3);
        default:            return Rational(1, 3) - Rational(1, 3 * g.exponent());
    }
}

// ---------------------------------------------------------------------------
// DFS kernel

namespace detail {

SfKernel::SfKernel(const FinAbGroup& g) : group_(g), n_((int)g.order()) {
    if (n_ > 64) throw GuardExceeded("sum-free DFS kernel needs group order <= 64");
    addt_.resize(n_ * n_);
    negt_.resize(n_);
    half_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        negt_[a] = g.neg(a);
        for (int b = 0; b < n_; ++b) addt_[a * n_ + b] = g.add(a, b);
    }
    for (int y = 0; y < n_; ++y) half_[addt_[y * n_ + y]] |= 1ull << y;
}

unsigned long long SfKernel::full_mask() const {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
}

template <class Visit>
void SfKernel::dfs(unsigned long long restrict_mask, Visit&& visit) const {
    struct Frame {
        unsigned long long forb;
        int elem;
    };
    std::vector<int> stack;
    stack.reserve(n_);
    // visit(A-mask, size, forb, next-start) returns whether to descend
    std::vector<Frame> frames;
    unsigned long long forb0 = 1ull;  // 0 is never addable
    std::function<void(unsigned long long, unsigned long long, int)> rec =
        [&](unsigned long long amask, unsigned long long forb, int start) {
            if (!visit(amask, (int)stack.size(), forb, start)) return;
            unsigned long long cands = restrict_mask & ~forb;
            cands &= start >= 64 ? 0 : ~((start ? (1ull << start) : 1ull) - 1);
            while (cands) {
                int x = __builtin_ctzll(cands);
                cands &= cands - 1;
                unsigned long long nf = forb | half_[x];
                const int* row = addt_.data() + x * n_;
                nf |= 1ull << row[x];
                int nx = negt_[x];
                const int* nrow = addt_.data() + nx * n_;
                for (int a : stack) {
                    nf |= 1ull << row[a];                 // a + x
                    nf |= 1ull << nrow[a];                // a - x
                    nf |= 1ull << row[negt_[a]];          // x - a
                }
                stack.push_back(x);
                rec(amask | (1ull << x), nf, x + 1);
                stack.pop_back();
            }
        };
    rec(0, forb0, 0);
}

void SfKernel::enumerate(unsigned long long restrict_mask,
                         const std::function<void(unsigned long long, int)>& visit) const {
    dfs(restrict_mask,
        [&](unsigned long long amask, int size, unsigned long long, int) {
            visit(amask, size);
            return true;
        });
}

long long SfKernel::count(unsigned long long restrict_mask, int workers) const {
    if (workers <= 1) {
        long long c = 0;
        dfs(restrict_mask, [&](unsigned long long, int, unsigned long long, int) {
            ++c;
            return true;
        });
        return c;
    }
    // split by first element: subtree(x) = sum-free sets with minimum x
    std::vector<int> tops;
    for (int x = 1; x < n_; ++x)
        if (restrict_mask >> x & 1) tops.push_back(x);
    std::vector<long long> partial(tops.size(), 0);
    std::atomic<size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= tops.size()) break;
            int first = tops[i];
            long long c = 0;
            // count sets whose least element is exactly tops[i]
            dfs(restrict_mask & ~((1ull << first) - 1),
                [&](unsigned long long amask, int size, unsigned long long, int) {
                    if (size == 0) return true;              // descend from the root
                    if (size == 1 && !(amask >> first & 1)) return false;
                    ++c;
                    return true;
                });
            partial[i] = c;
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    long long total = 1;  // the empty set
    for (long long c : partial) total += c;
    return total;
}

std::vector<unsigned long long> SfKernel::collect_of_size(unsigned long long restrict_mask,
                                                          int size) const {
    std::vector<unsigned long long> out;
    dfs(restrict_mask,
        [&](unsigned long long amask, int sz, unsigned long long forb, int start) {
            if (sz == size) {
                out.push_back(amask);
                return false;
            }
            unsigned long long avail = restrict_mask & ~forb;
            avail &= start >= 64 ? 0 : ~((start ? (1ull << start) : 1ull) - 1);
            return sz + __builtin_popcountll(avail) >= size;
        });
    return out;
}

std::pair<int, unsigned long long> SfKernel::max_set(unsigned long long restrict_mask) const {
    int best = -1;
    unsigned long long bestmask = 0;
    dfs(restrict_mask,
        [&](unsigned long long amask, int sz, unsigned long long forb, int start) {
            if (sz > best) {
                best = sz;
                bestmask = amask;
            }
            unsigned long long avail = restrict_mask & ~forb;
            avail &= start >= 64 ? 0 : ~((start ? (1ull << start) : 1ull) - 1);
            return sz + __builtin_popcountll(avail) > best;
        });
    return {best, bestmask};
}

}  // namespace detail

// ---------------------------------------------------------------------------

namespace {

void check_bruteforce_guard(const FinAbGroup& g, const Guards& guards) {
    bool cyclic_ok = g.rank() == 1 && g.exponent() <= guards.max_bruteforce_cyclic_m;
    if (!cyclic_ok && g.order() > guards.max_bruteforce_order)
        throw GuardExceeded("exact search refused for group of order " +
                            std::to_string(g.order()));
}

}  // namespace

MaxSumFree max_sumfree_bruteforce(const FinAbGroup& g, const Guards& guards) {
    check_bruteforce_guard(g, guards);
    detail::SfKernel k(g);
    auto [size, mask] = k.max_set(k.full_mask());
    return {size, GroupSubset::from_mask(g, mask)};
}

std::vector<GroupSubset> enumerate_extremal(const FinAbGroup& g, const Guards& guards) {
    check_bruteforce_guard(g, guards);
    detail::SfKernel k(g);
    auto masks = k.collect_of_size(k.full_mask(), (int)c_of_G(g));
    std::sort(masks.begin(), masks.end());  // low bits first = element-list lex
    std::vector<GroupSubset> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(GroupSubset::from_mask(g, m));
    std::sort(out.begin(), out.end(),
              [](const GroupSubset& a, const GroupSubset& b) { return a.lex_less(b); });
    return out;
}

long long count_all_sumfree(const FinAbGroup& g, const Guards& guards) {
    if (g.order() > guards.max_census_order)
        throw GuardExceeded("census refused for group of order " + std::to_string(g.order()));
    detail::SfKernel k(g);
    return k.count(k.full_mask(), guards.workers);
}

void for_each_sumfree(const FinAbGroup& g, const std::function<void(const GroupSubset&)>& fn,
                      const Guards& guards) {
    if (g.order() > guards.max_census_order)
        throw GuardExceeded("census refused for group of order " + std::to_string(g.order()));
    detail::SfKernel k(g);
    k.enumerate(k.full_mask(), [&](unsigned long long mask, int) {
        fn(GroupSubset::from_mask(g, mask));
    });
}

KneserReport kneser_coset_check(const GroupSubset& b) {
    KneserReport rep;
    long long bsize = b.size();
    GroupSubset bb = b.sum_with(b);
    long long ssize = bb.size();
    rep.applicable = bsize > 0 && 2 * ssize < 3 * bsize;
    rep.identity_applicable = bsize > 0 && ssize <= 2 * bsize - 1;
    if (bsize == 0) return rep;
    Subgroup h = stabilizer(bb);
    rep.stabilizer_order = h.order();
    if (rep.applicable) {
        Elem x0 = bb.elements().front();
        rep.coset_ok = bb == h.set.translated(x0);
        Elem b0 = b.elements().front();
        rep.containment_ok = b.subset_of(h.set.translated(b0));
    }
    if (rep.identity_applicable) {
        long long bh = b.sum_with(h.set).size();
        rep.identity_ok = ssize == 2 * bh - h.order();
    }
    return rep;
}

bool layer_inequality_check(const GroupSubset& a, const CyclicHom& f) {
    if (!is_sum_free(a)) throw std::invalid_argument("layer inequality needs a sum-free set");
    auto lay = layers(a, f);
    long long bound = a.group().order() / f.modulus;
    for (long long i = 0; i < f.modulus; ++i) {
        long long s = lay.at(i).size() + lay.at(2 * i % f.modulus).size();
        if (s > bound) return false;
    }
    return true;
}

std::vector<std::pair<long long, long long>> pair_partition(long long m) {
    if (m < 7 || m % 6 != 1)
        throw std::invalid_argument("pair partition needs m = 1 mod 6, m >= 7");
    long long k = (m - 1) / 6;
    long long inv2 = (m + 1) / 2;  // 2 * (m+1)/2 = m+1 = 1 mod m
    std::vector<std::pair<long long, long long>> out;
    for (long long y = 2 * k + 1; y <= 4 * k; ++y) out.push_back({y, y * inv2 % m});
    return out;
}

bool is_t_free(const GroupSubset& a, long long t) {
    if (t < 2) throw std::invalid_argument("t-free needs t >= 2");
    // t-fold sumset of A must avoid A
    GroupSubset s = a;
    for (long long i = 1; i < t; ++i) s = s.sum_with(a);
    return s.set_intersect(a).empty();
}

long long nu_t(const FinAbGroup& g, long long t) {
    if (t < 2) throw std::invalid_argument("t-free needs t >= 2");
    long long m = g.exponent();
    return g.order() * ((m - 2) / (t + 1) + 1) / m;
}

}  // namespace sumfree
