#include "sumfree/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace sumfree {

namespace {

std::vector<std::pair<long long, int>> factorize(long long v) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            int e = 0;
            while (v % p == 0) { v /= p; ++e; }
            out.push_back({p, e});
        }
    }
    if (v > 1) out.push_back({v, 1});
    return out;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

FinAbGroup FinAbGroup::make(const std::vector<long long>& factors) {
    if (factors.empty()) throw std::invalid_argument("group needs at least one factor");
    for (long long f : factors)
        if (f <= 1) throw std::invalid_argument("invalid cyclic factor " + std::to_string(f));
    // invariant-factor normalization: collect prime-power exponents, then
    // rebuild the chain largest-first
    std::map<long long, std::vector<int>> exps;
    for (long long f : factors)
        for (auto [p, e] : factorize(f)) exps[p].push_back(e);
    size_t len = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<>());
        len = std::max(len, es.size());
    }
    std::vector<long long> chain(len, 1);
    for (auto& [p, es] : exps)
        for (size_t j = 0; j < es.size(); ++j) chain[j] *= ipow(p, es[j]);
    std::reverse(chain.begin(), chain.end());  // ascending, d_i | d_{i+1}
    return from_chain(std::move(chain));
}

FinAbGroup FinAbGroup::trivial() {
    return from_chain({});
}

FinAbGroup FinAbGroup::from_chain(std::vector<long long> chain) {
    auto d = std::make_shared<Data>();
    d->factors = std::move(chain);
    int r = (int)d->factors.size();
    d->weights.assign(r, 1);
    for (int i = r - 2; i >= 0; --i) d->weights[i] = d->weights[i + 1] * d->factors[i + 1];
    d->n = 1;
    for (long long f : d->factors) {
        d->n *= f;
        if (d->n > (1 << 20))
            throw std::invalid_argument("group order too large for element indexing");
    }
    d->m = r ? d->factors.back() : 1;
    d->neg_table.resize(d->n);
    for (Elem a = 0; a < d->n; ++a) {
        long long idx = 0, rest = a;
        for (int i = 0; i < r; ++i) {
            long long c = rest / d->weights[i];
            rest %= d->weights[i];
            idx += ((d->factors[i] - c) % d->factors[i]) * d->weights[i];
        }
        d->neg_table[a] = (int)idx;
    }
    return FinAbGroup(std::move(d));
}

FinAbGroup make_group(const std::vector<long long>& factors) {
    return FinAbGroup::make(factors);
}

Elem FinAbGroup::add(Elem a, Elem b) const {
    long long idx = 0;
    int r = (int)d_->factors.size();
    long long ra = a, rb = b;
    for (int i = 0; i < r; ++i) {
        long long w = d_->weights[i];
        long long ca = ra / w, cb = rb / w;
        ra %= w;
        rb %= w;
        long long s = ca + cb;
        if (s >= d_->factors[i]) s -= d_->factors[i];
        idx += s * w;
    }
    return (Elem)idx;
}

Elem FinAbGroup::neg(Elem a) const { return d_->neg_table[a]; }

Elem FinAbGroup::scale(long long c, Elem a) const {
    long long idx = 0, rest = a;
    int r = (int)d_->factors.size();
    for (int i = 0; i < r; ++i) {
        long long x = rest / d_->weights[i];
        rest %= d_->weights[i];
        long long cc = c % d_->factors[i];
        if (cc < 0) cc += d_->factors[i];
        idx += (cc * x % d_->factors[i]) * d_->weights[i];
    }
    return (Elem)idx;
}

long long FinAbGroup::element_order(Elem a) const {
    long long rest = a, ord = 1;
    int r = (int)d_->factors.size();
    for (int i = 0; i < r; ++i) {
        long long x = rest / d_->weights[i];
        rest %= d_->weights[i];
        long long o = d_->factors[i] / std::gcd(x, d_->factors[i]);
        ord = std::lcm(ord, o);
    }
    return ord;
}

std::vector<long long> FinAbGroup::coords(Elem a) const {
    std::vector<long long> out(d_->factors.size());
    long long rest = a;
    for (size_t i = 0; i < d_->factors.size(); ++i) {
        out[i] = rest / d_->weights[i];
        rest %= d_->weights[i];
    }
    return out;
}

Elem FinAbGroup::at(const std::vector<long long>& cs) const {
    if (cs.size() != d_->factors.size())
        throw std::invalid_argument("coordinate tuple has wrong length");
    long long idx = 0;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] < 0 || cs[i] >= d_->factors[i])
            throw std::invalid_argument("coordinate out of range");
        idx += cs[i] * d_->weights[i];
    }
    return (Elem)idx;
}

Elem FinAbGroup::generator(int i) const { return (Elem)d_->weights[i]; }

// ---------------------------------------------------------------------------
// GroupSubset

GroupSubset::GroupSubset(FinAbGroup g)
    : group_(std::move(g)), words_((group_.order() + 63) / 64, 0) {}

GroupSubset GroupSubset::of(const FinAbGroup& g, const std::vector<Elem>& elems) {
    GroupSubset s(g);
    for (Elem e : elems) {
        if (e < 0 || e >= g.order()) throw std::invalid_argument("element index out of range");
        s.insert(e);
    }
    return s;
}

GroupSubset GroupSubset::full(const FinAbGroup& g) {
    GroupSubset s(g);
    for (size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ull;
    long long tail = g.order() & 63;
    if (tail) s.words_.back() &= (1ull << tail) - 1;
    return s;
}

GroupSubset GroupSubset::from_mask(const FinAbGroup& g, unsigned long long mask) {
    GroupSubset s(g);
    s.words_[0] = mask;
    return s;
}

long long GroupSubset::size() const {
    long long c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
}

std::vector<Elem> GroupSubset::elements() const {
    std::vector<Elem> out;
    for (size_t w = 0; w < words_.size(); ++w) {
        unsigned long long x = words_[w];
        while (x) {
            out.push_back((Elem)(w * 64 + __builtin_ctzll(x)));
            x &= x - 1;
        }
    }
    return out;
}

GroupSubset GroupSubset::sum_with(const GroupSubset& o) const {
    if (group_ != o.group_) throw std::invalid_argument("sumset of subsets of different groups");
    GroupSubset out(group_);
    auto ea = elements(), eb = o.elements();
    for (Elem a : ea)
        for (Elem b : eb) out.insert(group_.add(a, b));
    return out;
}

GroupSubset GroupSubset::negated() const {
    GroupSubset out(group_);
    for (Elem a : elements()) out.insert(group_.neg(a));
    return out;
}

GroupSubset GroupSubset::translated(Elem g) const {
    GroupSubset out(group_);
    for (Elem a : elements()) out.insert(group_.add(a, g));
    return out;
}

GroupSubset GroupSubset::dilated(long long c) const {
    GroupSubset out(group_);
    for (Elem a : elements()) out.insert(group_.scale(c, a));
    return out;
}

GroupSubset GroupSubset::set_union(const GroupSubset& o) const {
    GroupSubset out = *this;
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] |= o.words_[i];
    return out;
}

GroupSubset GroupSubset::set_intersect(const GroupSubset& o) const {
    GroupSubset out = *this;
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
    return out;
}

GroupSubset GroupSubset::set_minus(const GroupSubset& o) const {
    GroupSubset out = *this;
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~o.words_[i];
    return out;
}

GroupSubset GroupSubset::complement() const {
    return full(group_).set_minus(*this);
}

bool GroupSubset::subset_of(const GroupSubset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool GroupSubset::lex_less(const GroupSubset& o) const {
    return elements() < o.elements();
}

bool GroupSubset::size_lex_less(const GroupSubset& o) const {
    long long a = size(), b = o.size();
    if (a != b) return a < b;
    return elements() < o.elements();
}

unsigned long long GroupSubset::mask64() const {
    if (group_.order() > 64) throw std::logic_error("mask64 on group of order > 64");
    return words_.empty() ? 0 : words_[0];
}

// ---------------------------------------------------------------------------
// Subgroup helpers

std::vector<long long> subgroup_invariant_factors(const GroupSubset& k);

FinAbGroup Subgroup::as_group() const {
    if (invariant_factors.empty()) return FinAbGroup::trivial();
    return FinAbGroup::make(invariant_factors);
}

// Invariant factors of a subgroup from its order statistics: for each prime
// p and j >= 1, #{x in K : p^j x = 0} = p^(sum_i min(j, e_i)) determines the
// exponent partition of the p-part.
std::vector<long long> subgroup_invariant_factors(const GroupSubset& k) {
    const FinAbGroup& g = k.group();
    long long kn = k.size();
    if (kn <= 1) return {};
    auto elems = k.elements();
    std::map<long long, std::vector<int>> exps;  // p -> exponents descending
    for (auto [p, e] : factorize(kn)) {
        (void)e;
        std::vector<long long> cnt;  // cnt[j] = #{x : p^j x = 0}
        cnt.push_back(1);
        long long pj = 1;
        while (true) {
            pj *= p;
            long long c = 0;
            for (Elem x : elems)
                if (g.scale(pj, x) == 0) ++c;
            cnt.push_back(c);
            if (c == cnt[cnt.size() - 2]) break;
        }
        std::vector<int> heights;  // #{i : e_i >= j} for j = 1,2,...
        for (size_t j = 1; j < cnt.size(); ++j) {
            long long ratio = cnt[j] / cnt[j - 1];
            int h = 0;
            while (ratio > 1) { ratio /= p; ++h; }
            if (h == 0) break;
            heights.push_back(h);
        }
        // heights[j-1] = number of cyclic p-factors with exponent >= j
        std::vector<int> es;
        for (int i = 0; i < (heights.empty() ? 0 : heights[0]); ++i) {
            int e = 0;
            for (size_t j = 0; j < heights.size(); ++j)
                if (heights[j] > i) e = (int)j + 1;
            es.push_back(e);
        }
        std::sort(es.begin(), es.end(), std::greater<>());
        exps[p] = es;
    }
    size_t len = 0;
    for (auto& [p, es] : exps) len = std::max(len, es.size());
    std::vector<long long> chain(len, 1);
    for (auto& [p, es] : exps)
        for (size_t j = 0; j < es.size(); ++j) chain[j] *= ipow(p, es[j]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// ---------------------------------------------------------------------------
// group_type

GroupTypeResult group_type(const FinAbGroup& g) {
    long long n = g.order();
    long long best = 0;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        if (p % 3 == 2 && (best == 0 || p < best)) best = p;
    }
    if (best) return {GroupType::I, best};
    if (n % 3 == 0) return {GroupType::II, 0};
    return {GroupType::III, 0};
}

// ---------------------------------------------------------------------------
// enumerate_subgroups: all cyclic subgroups, closed under pairwise joins.

std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g, const Guards& guards) {
    if (g.order() > guards.max_structural_order)
        throw GuardExceeded("subgroup enumeration refused: order " +
                            std::to_string(g.order()) + " exceeds guard " +
                            std::to_string(guards.max_structural_order));
    std::set<std::vector<unsigned long long>> seen;
    std::vector<GroupSubset> subs;
    auto add_sub = [&](const GroupSubset& s) {
        if (seen.insert(s.words()).second) {
            subs.push_back(s);
            return true;
        }
        return false;
    };
    for (Elem x = 0; x < g.order(); ++x) {
        GroupSubset c(g);
        Elem cur = 0;
        c.insert(0);
        do {
            cur = g.add(cur, x);
            c.insert(cur);
        } while (cur != 0);
        add_sub(c);
    }
    // join closure; the sumset of two subgroups is already a subgroup
    bool changed = true;
    while (changed) {
        changed = false;
        size_t cnt = subs.size();
        for (size_t i = 0; i < cnt; ++i)
            for (size_t j = i + 1; j < cnt; ++j) {
                if (subs[i].subset_of(subs[j]) || subs[j].subset_of(subs[i])) continue;
                if (add_sub(subs[i].sum_with(subs[j]))) changed = true;
            }
    }
    std::sort(subs.begin(), subs.end(),
              [](const GroupSubset& a, const GroupSubset& b) { return a.size_lex_less(b); });
    std::vector<Subgroup> out;
    out.reserve(subs.size());
    for (auto& s : subs) out.push_back({s, subgroup_invariant_factors(s)});
    return out;
}

// ---------------------------------------------------------------------------
// enumerate_surjections_to_cyclic

std::vector<CyclicHom> enumerate_surjections_to_cyclic(const FinAbGroup& g, long long q) {
    if (q < 1 || g.exponent() % q != 0)
        throw std::invalid_argument("q = " + std::to_string(q) +
                                    " does not divide the exponent " +
                                    std::to_string(g.exponent()));
    int r = g.rank();
    std::vector<long long> step(r), count(r);
    long long total = 1;
    for (int i = 0; i < r; ++i) {
        long long gc = std::gcd(g.invariant_factors()[i], q);
        step[i] = q / gc;
        count[i] = gc;
        total *= gc;
    }
    if (total > 10000000)
        throw GuardExceeded("homomorphism search space too large");
    std::vector<CyclicHom> out;
    for (long long it = 0; it < total; ++it) {
        std::vector<long long> imgs(r);
        long long rest = it;
        for (int i = r - 1; i >= 0; --i) {
            imgs[i] = (rest % count[i]) * step[i];
            rest /= count[i];
        }
        long long acc = q;
        for (long long v : imgs) acc = std::gcd(acc, v);
        if (acc == 1) out.push_back({q, imgs, true});
    }
    // odometer runs the last image fastest, which is already lex order on
    // image tuples
    return out;
}

long long CyclicHom::apply(const FinAbGroup& g, Elem a) const {
    auto cs = g.coords(a);
    long long v = 0;
    for (size_t i = 0; i < cs.size(); ++i) v += cs[i] % modulus * (images[i] % modulus) % modulus;
    return v % modulus;
}

std::vector<int> CyclicHom::value_table(const FinAbGroup& g) const {
    std::vector<int> t(g.order());
    for (Elem a = 0; a < g.order(); ++a) t[a] = (int)apply(g, a);
    return t;
}

// ---------------------------------------------------------------------------
// enumerate_splittings

std::vector<Splitting> enumerate_splittings(const FinAbGroup& g, const Guards& guards) {
    long long n = g.order(), m = g.exponent();
    auto subs = enumerate_subgroups(g, guards);
    std::vector<Splitting> out;
    for (auto& H : subs) {
        if (H.order() != n / m) continue;
        for (Elem x = 0; x < n; ++x) {
            if (g.element_order(x) != m) continue;
            bool ok = true;
            Elem cur = x;
            for (long long c = 1; c < m && ok; ++c) {
                if (H.set.contains(cur)) ok = false;
                cur = g.add(cur, x);
            }
            if (ok) out.push_back({H, x});
        }
    }
    // subgroup list is already sorted; gens ascend within each H
    return out;
}

// ---------------------------------------------------------------------------
// stabilizer

Subgroup stabilizer(const GroupSubset& a) {
    const FinAbGroup& g = a.group();
    GroupSubset s(g);
    auto elems = a.elements();
    for (Elem t = 0; t < g.order(); ++t) {
        bool ok = true;
        for (Elem x : elems)
            if (!a.contains(g.add(x, t))) { ok = false; break; }
        if (ok) s.insert(t);
    }
    return {s, subgroup_invariant_factors(s)};
}

// ---------------------------------------------------------------------------
// automorphisms

namespace {

// generators of (Z/p^t Z)^*: a primitive root for odd p, the classical
// {-1, 5} pair for p = 2, t >= 3
std::vector<long long> unit_group_generators_mod_pk(long long p, int t) {
    long long mod = ipow(p, t);
    if (p == 2) {
        if (t == 1) return {};
        if (t == 2) return {3};
        return {mod - 1, 5};
    }
    long long phi = mod / p * (p - 1);
    auto fac = factorize(phi);
    for (long long cand = 2; cand < mod; ++cand) {
        if (cand % p == 0) continue;
        bool prim = true;
        for (auto [q, e] : fac) {
            (void)e;
            long long x = 1, b = cand, ee = phi / q;
            while (ee) {
                if (ee & 1) x = (__int128)x * b % mod;
                b = (__int128)b * b % mod;
                ee >>= 1;
            }
            if (x == 1) { prim = false; break; }
        }
        if (prim) return {cand};
    }
    throw std::logic_error("no primitive root found");
}

std::vector<long long> unit_group_generators(long long M) {
    // CRT-lift per prime power: u = g mod p^t, u = 1 elsewhere
    std::vector<long long> out;
    for (auto [p, t] : factorize(M)) {
        long long pk = ipow(p, t), rest = M / pk;
        for (long long gen : unit_group_generators_mod_pk(p, t)) {
            if (rest == 1) { out.push_back(gen); continue; }
            // solve u = gen (p^t), u = 1 (rest)
            long long u = 0;
            for (long long cand = gen; cand < M; cand += pk)
                if (cand % rest == 1) { u = cand; break; }
            out.push_back(u);
        }
    }
    return out;
}

Perm perm_from_images(const FinAbGroup& g, const std::vector<Elem>& imgs) {
    long long n = g.order();
    int r = g.rank();
    Perm p(n);
    for (Elem x = 0; x < n; ++x) {
        auto cs = g.coords(x);
        Elem y = 0;
        for (int i = 0; i < r; ++i) y = g.add(y, g.scale(cs[i], imgs[i]));
        p[x] = y;
    }
    return p;
}

bool perm_is_bijection(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool uniform_factors(const FinAbGroup& g) {
    auto& f = g.invariant_factors();
    for (auto v : f)
        if (v != f[0]) return false;
    return !f.empty();
}

// every automorphism, by images of canonical generators filtered on element
// order, bijectivity checked on the full table
std::vector<Perm> brute_force_automorphisms(const FinAbGroup& g, const Guards& guards) {
    int r = g.rank();
    long long n = g.order();
    std::vector<std::vector<Elem>> cands(r);
    double total = 1;
    for (int i = 0; i < r; ++i) {
        long long want = g.invariant_factors()[i];
        for (Elem y = 0; y < n; ++y)
            if (g.element_order(y) == want) cands[i].push_back(y);
        total *= (double)cands[i].size();
    }
    if (total > (double)guards.max_aut_candidates)
        throw GuardExceeded("Aut search space too large for brute force");
    std::vector<Perm> out;
    std::vector<size_t> pick(r, 0);
    while (true) {
        std::vector<Elem> imgs(r);
        for (int i = 0; i < r; ++i) imgs[i] = cands[i][pick[i]];
        Perm p = perm_from_images(g, imgs);
        if (perm_is_bijection(p)) out.push_back(std::move(p));
        int i = r - 1;
        while (i >= 0 && ++pick[i] == cands[i].size()) pick[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

}  // namespace

std::vector<Perm> automorphism_generators(const FinAbGroup& g, const Guards& guards) {
    long long n = g.order();
    if (n > guards.max_structural_order)
        throw GuardExceeded("automorphism enumeration refused: order " + std::to_string(n));
    if (n == 1) return {};
    int r = g.rank();
    if (!uniform_factors(g)) return brute_force_automorphisms(g, guards);

    // (Z/MZ)^r: Aut = GL(r, Z/MZ), generated by a diagonal unit, coordinate
    // permutations and one transvection
    long long M = g.invariant_factors()[0];
    std::vector<std::vector<Elem>> images;
    std::vector<Elem> id(r);
    for (int i = 0; i < r; ++i) id[i] = g.generator(i);
    for (long long u : unit_group_generators(M)) {
        auto imgs = id;
        imgs[0] = g.scale(u, g.generator(0));
        images.push_back(imgs);
    }
    if (r >= 2) {
        auto sw = id;
        std::swap(sw[0], sw[1]);
        images.push_back(sw);
        if (r >= 3) {
            auto cyc = id;
            for (int i = 0; i < r; ++i) cyc[i] = g.generator((i + 1) % r);
            images.push_back(cyc);
        }
        auto tv = id;
        tv[0] = g.add(g.generator(0), g.generator(1));
        images.push_back(tv);
    }
    std::vector<Perm> out;
    for (auto& imgs : images) {
        Perm p = perm_from_images(g, imgs);
        if (!perm_is_bijection(p)) throw std::logic_error("generator is not bijective");
        out.push_back(std::move(p));
    }
    return out;
}

long long automorphism_group_order(const FinAbGroup& g, const Guards& guards) {
    if (g.order() == 1) return 1;
    if (!uniform_factors(g)) return (long long)brute_force_automorphisms(g, guards).size();
    auto gens = automorphism_generators(g, guards);
    long long n = g.order();
    std::set<Perm> seen;
    Perm ident(n);
    for (Elem i = 0; i < n; ++i) ident[i] = i;
    seen.insert(ident);
    std::vector<Perm> frontier{ident};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (auto& q : frontier)
            for (auto& p : gens) {
                Perm comp(n);
                for (Elem i = 0; i < n; ++i) comp[i] = p[q[i]];
                if (seen.insert(comp).second) next.push_back(std::move(comp));
            }
        if ((long long)seen.size() * n > 200000000)
            throw GuardExceeded("Aut closure too large");
        frontier = std::move(next);
    }
    return (long long)seen.size();
}

// ---------------------------------------------------------------------------
// layers

std::map<long long, GroupSubset> layers(const GroupSubset& a, const CyclicHom& f) {
    if (!f.surjective) throw std::invalid_argument("layers requires a surjective homomorphism");
    const FinAbGroup& g = a.group();
    std::map<long long, GroupSubset> out;
    for (long long i = 0; i < f.modulus; ++i) out.emplace(i, GroupSubset(g));
    for (Elem x : a.elements()) out.at(f.apply(g, x)).insert(x);
    return out;
}

// ---------------------------------------------------------------------------
// splittings <-> surjections

CyclicHom splitting_projection(const FinAbGroup& g, const Splitting& s) {
    long long m = g.exponent();
    std::vector<int> proj(g.order(), -1);
    for (Elem h : s.H.set.elements()) {
        Elem cur = h;
        for (long long c = 0; c < m; ++c) {
            if (proj[cur] != -1)
                throw std::invalid_argument("not a splitting: decomposition not unique");
            proj[cur] = (int)c;
            cur = g.add(cur, s.gen);
        }
    }
    for (int v : proj)
        if (v == -1) throw std::invalid_argument("not a splitting: H + <gen> does not cover G");
    CyclicHom f;
    f.modulus = m;
    f.images.resize(g.rank());
    for (int i = 0; i < g.rank(); ++i) f.images[i] = proj[g.generator(i)];
    f.surjective = true;
    return f;
}

Splitting splitting_from_surjection(const FinAbGroup& g, const CyclicHom& f) {
    if (!f.surjective || f.modulus != g.exponent())
        throw std::invalid_argument("need a surjection onto Z/mZ");
    GroupSubset ker(g);
    Elem gen = -1;
    for (Elem x = 0; x < g.order(); ++x) {
        long long v = f.apply(g, x);
        if (v == 0) ker.insert(x);
        if (v == 1 && gen == -1) gen = x;
    }
    return {{ker, subgroup_invariant_factors(ker)}, gen};
}

GroupSubset apply_perm(const Perm& p, const GroupSubset& a) {
    GroupSubset out(a.group());
    for (Elem x : a.elements()) out.insert(p[x]);
    return out;
}

}  // namespace sumfree
