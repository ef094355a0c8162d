#pragma once

#include <functional>
#include <vector>

#include "sumfree/group.hpp"
#include "sumfree/rational.hpp"

namespace sumfree {

// A is sum-free iff (A + A) meet A is empty (x = y allowed).
bool is_sum_free(const GroupSubset& a);

struct SchurReport {
    long long triple_count = 0;     // #{(x,y,z) in A^3 : x+y = z}
    double fourier_residual = 0.0;  // |sum_gamma Ahat^2 conj(Ahat)| / n
};

// Integer triple count plus the character-sum check; the two agree within
// 1e-6, the integer count is the source of truth.
SchurReport schur_report(const GroupSubset& a);

// c(G) = n * max_{d | m} ([(d-2)/3] + 1) / d.
long long c_of_G(const FinAbGroup& g);
// mu(G) by group type (1/3 + 1/3p, 1/3, 1/3 - 1/3m); equals c(G)/n.
Rational mu_of_G(const FinAbGroup& g);

struct MaxSumFree {
    long long size = 0;
    GroupSubset witness;
};

// Exact maximum by pruned DFS over the tree of sum-free sets.
MaxSumFree max_sumfree_bruteforce(const FinAbGroup& g, const Guards& guards = default_guards());

// All sum-free sets of size exactly c(G), sorted by element lists.
std::vector<GroupSubset> enumerate_extremal(const FinAbGroup& g,
                                            const Guards& guards = default_guards());

// |SF(G)| including the empty set.
long long count_all_sumfree(const FinAbGroup& g, const Guards& guards = default_guards());

// Streaming census in canonical DFS order (single-threaded).
void for_each_sumfree(const FinAbGroup& g, const std::function<void(const GroupSubset&)>& fn,
                      const Guards& guards = default_guards());

struct KneserReport {
    bool applicable = false;          // |B+B| < (3/2)|B|
    bool coset_ok = false;            // B+B is one coset of S(B+B)
    bool containment_ok = false;      // B lies in one coset of S(B+B)
    bool identity_applicable = false; // |B+B| <= 2|B| - 1
    bool identity_ok = false;         // |B+B| = 2|B+H| - |H|, H = S(B+B)
    long long stabilizer_order = 0;
    bool passed() const {
        return (!applicable || (coset_ok && containment_ok)) &&
               (!identity_applicable || identity_ok);
    }
};

KneserReport kneser_coset_check(const GroupSubset& b);

// |A_i| + |A_{2i}| <= n/q for all i (requires A sum-free, f surjective).
bool layer_inequality_check(const GroupSubset& a, const CyclicHom& f);

// The 2k disjoint pairs (y, y/2), y in [2k+1,4k]_m, covering [k+1,5k]_m.
std::vector<std::pair<long long, long long>> pair_partition(long long m);

// No solution of x_1 + ... + x_t = y within A; t = 2 is is_sum_free.
bool is_t_free(const GroupSubset& a, long long t);

// nu_t(G) = n * ([(m-2)/(t+1)] + 1) / m.
long long nu_t(const FinAbGroup& g, long long t);

namespace detail {

// DFS kernel over the tree of sum-free subsets of a group of order <= 64.
// Each node of the tree is a sum-free set; children extend by a larger
// element.  Adding x is legal iff x is not 0, not in A+A, not in A-A, and
// 2x is not in A union {x}; these are maintained incrementally as masks.
class SfKernel {
public:
    explicit SfKernel(const FinAbGroup& g);

    const FinAbGroup& group() const { return group_; }
    int n() const { return n_; }
    unsigned long long full_mask() const;

    // visit(mask, size) for every sum-free subset of `restrict`, empty set
    // included, in canonical DFS order
    void enumerate(unsigned long long restrict_mask,
                   const std::function<void(unsigned long long, int)>& visit) const;

    // node count only; workers > 1 splits the top-level branches
    long long count(unsigned long long restrict_mask, int workers = 1) const;

    // all sum-free subsets of exact size, with cardinality pruning
    std::vector<unsigned long long> collect_of_size(unsigned long long restrict_mask,
                                                    int size) const;

    // lexicographically-first maximum sum-free subset
    std::pair<int, unsigned long long> max_set(unsigned long long restrict_mask) const;

    int add(int a, int b) const { return addt_[a * n_ + b]; }
    int neg(int a) const { return negt_[a]; }

private:
    FinAbGroup group_;
    int n_;
    std::vector<int> addt_, negt_;
    std::vector<unsigned long long> half_;  // half_[x] = {y : 2y = x}

    template <class Visit>
    void dfs(unsigned long long restrict_mask, Visit&& visit) const;
};

}  // namespace detail

}  // namespace sumfree
