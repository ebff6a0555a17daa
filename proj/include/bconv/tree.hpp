#pragma once

#include "bconv/field.hpp"
#include "bconv/measure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bconv {

/// A +-1 word; empty word is the root. Lexicographic order with -1 < +1.
using SignSequence = std::vector<int8_t>;

std::string word_to_string(const SignSequence& w);

/**
 * The surviving words D_n* at one level of the pruned tree, in lexicographic
 * order, with parent links into the previous level and beta^n-scaled
 * positions x_eps * beta^n.
 */
struct PrunedLevel {
    int n = 0;
    std::vector<SignSequence> survivors;
    std::vector<long> parent_index;       // -1 at the root
    std::vector<FieldElement> positions;  // beta^n-scaled

    size_t size() const { return survivors.size(); }
};

/// The level-0 root.
PrunedLevel root_level(const FieldSpec& spec);

/// Definition of D_{n+1}*: keep a survivor's child iff its exact position
/// occurs in supp(nu^{(n+1)}). nu_next must be the level n+1 signed measure.
PrunedLevel grow(const PrunedLevel& level, const FieldSpec& spec,
                 const SignedMeasure& nu_next);

struct CheckReport {
    bool pass = true;
    std::string detail;
};

/// Verify survivors (lex order) -> atoms (position order) is a strictly
/// order-preserving bijection.
CheckReport check_isomorphism(const PrunedLevel& level, const SignedMeasure& nu,
                              const FieldSpec& spec);

/// Every survivor of `level` has at least one surviving child in `next`.
CheckReport check_leafless(const PrunedLevel& level, const PrunedLevel& next);

struct DiamondReport {
    bool pass = true;
    long b_n = 0;  // number of canceling pairs at this level
    std::string detail;
};

/**
 * For level n >= m: enumerate all pairs (eps_a, eps_b) of survivors with
 * x_{eps_a +} = x_{eps_b -} by exact equality; verify each canceling pair
 * sits under a common ancestor at level n-m whose both children survive,
 * reached by paths +-...- and -+...+; verify no survivor loses both
 * children; and check b_n = |D_{n-m+1}*| - |D_{n-m}*|.
 *
 * `levels` must hold levels 0..n+1 of the pruned tree.
 */
DiamondReport check_diamond(const std::vector<PrunedLevel>& levels, int n,
                            const FieldSpec& spec);

/**
 * Separation: for pairs eps_a < eps_b at level n0 and descendants k levels
 * down, x_{eps_a' +} <= x_{eps_b' -}, strict when k >= m. Descendant sets
 * are contiguous lex ranges; given order preservation (checked separately)
 * the extreme descendants witness the whole range. max_pairs = 0 means
 * exhaustive over adjacent-and-beyond pairs; otherwise a deterministic
 * sample of that many pairs.
 */
CheckReport check_separation(const std::vector<PrunedLevel>& levels, int n0,
                             int k, const FieldSpec& spec, long max_pairs = 0,
                             unsigned long seed = 1);

/// Exact scaled-integer checks of the two inequalities behind the pruning
/// analysis: rho - sum_{j=2..n} rho^j >= rho^{n+1} for n <= m, and
/// rho/(1-rho) < 2 (equivalently beta^m > 2).
CheckReport check_pruning_inequalities(const FieldSpec& spec);

/// Levels 0..depth of the pruned tree driven by iterated signed steps.
/// Returns the levels and the measures nu^{(0..depth)}.
struct TreeBuild {
    std::vector<PrunedLevel> levels;
    std::vector<SignedMeasure> measures;
};
TreeBuild build_tree(const FieldSpec& spec, int depth);

/// DOT export of T* up to the given depth.
std::string tree_to_dot(const std::vector<PrunedLevel>& levels, int depth);

}  // namespace bconv
