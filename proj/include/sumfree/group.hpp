#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/error.hpp"

namespace sumfree {

// Element of a finite abelian group, identified by its mixed-radix rank.
// With invariant factors d_1 | d_2 | ... | d_r the element (x_1,...,x_r) has
// index x_1*(d_2*...*d_r) + ... + x_r, i.e. indices sort lexicographically
// by coordinate tuple.  Index order is the canonical order everywhere.
using Elem = int;

// A finite abelian group in invariant-factor form.  Immutable; cheap to
// copy (shared state).  All element arithmetic goes through indices.
class FinAbGroup {
public:
    // Normalizes an arbitrary cyclic decomposition into the invariant-factor
    // chain.  Rejects factors <= 1 and the empty list.
    static FinAbGroup make(const std::vector<long long>& factors);
    // The one-element group; not constructible through make() but needed as
    // the supplement H of a cyclic group.
    static FinAbGroup trivial();

    const std::vector<long long>& invariant_factors() const { return d_->factors; }
    long long order() const { return d_->n; }
    long long exponent() const { return d_->m; }
    int rank() const { return (int)d_->factors.size(); }

    Elem zero() const { return 0; }
    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem scale(long long c, Elem a) const;
    long long element_order(Elem a) const;

    std::vector<long long> coords(Elem a) const;
    Elem at(const std::vector<long long>& coords) const;
    Elem generator(int i) const;  // canonical generator e_i of the i-th factor

    bool operator==(const FinAbGroup& o) const { return d_->factors == o.d_->factors; }
    bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

private:
    struct Data {
        std::vector<long long> factors;
        std::vector<long long> weights;  // mixed-radix place values
        long long n = 1;
        long long m = 1;
        std::vector<int> neg_table;
    };
    std::shared_ptr<const Data> d_;
    explicit FinAbGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    static FinAbGroup from_chain(std::vector<long long> chain);
};

// spec-facing alias
FinAbGroup make_group(const std::vector<long long>& factors);

struct GroupElement {
    std::vector<long long> coords;
};

// Membership bit-vector over the fixed element indexing of one group.
class GroupSubset {
public:
    explicit GroupSubset(FinAbGroup g);
    static GroupSubset of(const FinAbGroup& g, const std::vector<Elem>& elems);
    static GroupSubset full(const FinAbGroup& g);
    static GroupSubset from_mask(const FinAbGroup& g, unsigned long long mask);

    const FinAbGroup& group() const { return group_; }
    bool contains(Elem a) const { return (words_[a >> 6] >> (a & 63)) & 1u; }
    void insert(Elem a) { words_[a >> 6] |= 1ull << (a & 63); }
    void erase(Elem a) { words_[a >> 6] &= ~(1ull << (a & 63)); }
    long long size() const;
    bool empty() const { return size() == 0; }
    std::vector<Elem> elements() const;

    GroupSubset sum_with(const GroupSubset& o) const;  // A + B
    GroupSubset negated() const;                       // -A
    GroupSubset translated(Elem g) const;              // A + g
    GroupSubset dilated(long long c) const;            // c.A
    GroupSubset set_union(const GroupSubset& o) const;
    GroupSubset set_intersect(const GroupSubset& o) const;
    GroupSubset set_minus(const GroupSubset& o) const;
    GroupSubset complement() const;
    bool subset_of(const GroupSubset& o) const;

    bool operator==(const GroupSubset& o) const { return words_ == o.words_; }
    bool operator!=(const GroupSubset& o) const { return !(*this == o); }
    // canonical order: by sorted element lists (same as bit order from index 0)
    bool lex_less(const GroupSubset& o) const;
    // order used for subgroup lists: cardinality first, then lexicographic
    bool size_lex_less(const GroupSubset& o) const;

    unsigned long long mask64() const;  // requires order <= 64
    const std::vector<unsigned long long>& words() const { return words_; }

private:
    FinAbGroup group_;
    std::vector<unsigned long long> words_;
};

struct Subgroup {
    GroupSubset set;
    std::vector<long long> invariant_factors;  // of the subgroup itself

    long long order() const { return set.size(); }
    // the subgroup as an abstract group (trivial() when order 1)
    FinAbGroup as_group() const;
};

// Homomorphism G -> Z/qZ given by the images of the canonical generators.
struct CyclicHom {
    long long modulus = 1;               // q
    std::vector<long long> images;       // g_i, one per invariant factor
    bool surjective = false;             // gcd(g_1,...,g_r,q) == 1

    long long apply(const FinAbGroup& g, Elem a) const;
    std::vector<int> value_table(const FinAbGroup& g) const;
};

// A splitting (H, f) of G by Z/mZ: H a supplement, gen = f(1) of order m.
struct Splitting {
    Subgroup H;
    Elem gen = 0;
};

enum class GroupType { I, II, III };

struct GroupTypeResult {
    GroupType type;
    long long p = 0;  // least prime = 2 mod 3 dividing n, for type I
};

GroupTypeResult group_type(const FinAbGroup& g);

// Complete duplicate-free subgroup list, sorted by (cardinality, lex).
std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g,
                                          const Guards& guards = default_guards());

// All surjective homomorphisms G -> Z/qZ; requires q | exponent.
std::vector<CyclicHom> enumerate_surjections_to_cyclic(const FinAbGroup& g, long long q);

// All pairs (H, gen) with |H| = n/m, order(gen) = m, <gen> meet H = {0}.
std::vector<Splitting> enumerate_splittings(const FinAbGroup& g,
                                            const Guards& guards = default_guards());

// S(A) = {g : g + A = A}; always a subgroup, S(empty) = G.
Subgroup stabilizer(const GroupSubset& a);

// Invariant factors of a subgroup given as a bit-vector, read off its
// order statistics.
std::vector<long long> subgroup_invariant_factors(const GroupSubset& k);

// Automorphisms as permutation tables of element indices.
using Perm = std::vector<int>;

// A finite generating set of Aut(G).  For groups of shape (Z/MZ)^s these are
// GL generators (diagonal unit, swap, cycle, one transvection); otherwise a
// guarded brute-force search returns every automorphism.
std::vector<Perm> automorphism_generators(const FinAbGroup& g,
                                          const Guards& guards = default_guards());

// |Aut(G)| via closure of the generator set (guarded BFS).
long long automorphism_group_order(const FinAbGroup& g,
                                   const Guards& guards = default_guards());

// A_i = f^{-1}{i} meet A for each i in Z/qZ; requires f surjective.
std::map<long long, GroupSubset> layers(const GroupSubset& a, const CyclicHom& f);

// Projection G -> Z/mZ with kernel H and value 1 on s.gen (as a CyclicHom).
CyclicHom splitting_projection(const FinAbGroup& g, const Splitting& s);

// Splitting attached to a surjection onto Z/mZ: H = ker f, gen = least
// preimage of 1.
Splitting splitting_from_surjection(const FinAbGroup& g, const CyclicHom& f);

// Apply a permutation table to a subset.
GroupSubset apply_perm(const Perm& p, const GroupSubset& a);

}  // namespace sumfree
