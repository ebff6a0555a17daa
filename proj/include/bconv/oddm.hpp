#pragma once

#include "bconv/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bconv {

/// A {0,+-1} vector eta of length n with sum_{j} eta_j beta^{-j} = 0 and odd
/// support parity; exists iff ||nu^{(n)}|| < 1 for some n.
struct CancellationWitness {
    int n = 0;
    std::vector<int8_t> eta;  // eta_1 .. eta_n, eta_n != 0
};

/**
 * Search {0,+-1}^n for n = 1..n_max for the lexicographically first witness
 * (order -1 < 0 < +1), meet-in-the-middle over half-length prefixes keyed by
 * canonical field elements. Returns the witness at the smallest n, or
 * nullopt if none exists up to n_max.
 */
std::optional<CancellationWitness> search_witness(int m, int n_max);

struct OddmReport {
    bool pass = true;
    int max_n_checked = 0;
    std::string detail;
};

/// For odd m: nu^{(n)} has total variation exactly 1 and its variation
/// equals mu^{(n)} atom-for-atom, for all n <= n_max.
OddmReport verify_no_decay(int m, int n_max);

/// For odd m: every coinciding pair of sign sequences at n <= n_max has a
/// difference vector eta with even support sum (so the atoms reinforce).
/// Reports the number of coincidences found.
struct ParityReport {
    bool pass = true;
    long coincidences = 0;
    int max_n_checked = 0;
    std::string detail;
};
ParityReport verify_parity_argument(int m, int n_max);

}  // namespace bconv
