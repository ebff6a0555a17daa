#pragma once

#include <string>

namespace bconv {

struct VerifySuiteResult {
    bool pass = true;
    std::string report;  // one line per check, deterministic for fixed inputs
};

/**
 * Run the full lemma-check suite for a multinacci parameter m.
 *
 * Even m: recurrence vs stepped and brute-forced measures, first pruning,
 * isomorphism, leaflessness, diamond pattern with b_n accounting,
 * separation, exact pruning inequalities, unit numerators.
 * Odd m: no-decay, variation identity, parity of coincidences, absence of
 * cancellation witnesses.
 *
 * depth bounds the pruned-tree checks, brute_depth the 2^n expansions.
 * seed feeds the sampled separation checks only.
 */
VerifySuiteResult run_verify_suite(int m, int depth, int brute_depth,
                                   unsigned long seed);

}  // namespace bconv
