#pragma once

#include <stdexcept>
#include <string>

namespace sumfree {

// Thrown when an operation would exceed a configured size guard.  The CLI
// maps this to exit code 2 so refusals are distinguishable from failures.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation contradicts a structural statement the rest of
// the pipeline relies on (e.g. an extremal set without a presentation).
// This must be loud: the CLI exits 1 and names the counterexample.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Size guards.  These are configuration, not constants: every enumerating
// operation takes a Guards argument and refuses (GuardExceeded) instead of
// running unbounded.
struct Guards {
    long long max_structural_order = 10000;  // subgroup/splitting/aut enumeration
    long long max_bruteforce_order = 64;     // exact-maximum DFS
    long long max_bruteforce_cyclic_m = 31;  // cyclic groups allowed up to this exponent
    long long max_census_order = 49;         // full |SF(G)| census
    long long max_window_elements = 24;      // window-count identity DFS
    long long max_doubling_bits = 25;        // doubling-table subset scan
    long long max_aut_candidates = 2000000;  // brute-force Aut search space
    int workers = 1;
};

inline const Guards& default_guards() {
    static const Guards g{};
    return g;
}

}  // namespace sumfree
