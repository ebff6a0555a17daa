#pragma once

#include "bconv/field.hpp"

#include <vector>

namespace bconv {

/// A position elem * beta^{-level}. Positions of a level-n measure are kept
/// in beta^n-scaled integer form so all comparisons stay in Z[beta].
struct ScaledPoint {
    FieldElement elem;
    int level = 0;
};

/**
 * A finite signed atomic measure at level n: sorted atoms with integer
 * numerators over the common mass unit 2^{-n}. Positions are stored
 * beta^n-scaled; no zero numerators survive merging.
 */
class SignedMeasure {
public:
    struct Atom {
        FieldElement pos;  // beta^level-scaled position
        Int num;           // numerator over 2^level
    };

    /// delta_0 at level 0.
    static SignedMeasure dirac_zero(const FieldSpec& spec);

    int level() const { return level_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    /// Convolve with (delta_{beta^{-(n+1)}} - delta_{-beta^{-(n+1)}})/2:
    /// each atom spawns a shifted copy and a negated mirrored copy, merged
    /// with exact cancellation.
    SignedMeasure signed_step(const FieldSpec& spec) const;

    /// Same with + signs: both children keep the parent's numerator.
    SignedMeasure unsigned_step(const FieldSpec& spec) const;

    /// Sum of |numerator| * 2^{-level}, exact.
    Rat total_variation() const;

    /// Strictly increasing positions at this level.
    std::vector<ScaledPoint> support_positions() const;

    /// Same atoms with numerators replaced by absolute values.
    SignedMeasure variation_measure() const;

    bool operator==(const SignedMeasure& rhs) const;

    /// Find the atom index holding exactly this beta^level-scaled position,
    /// or -1. Binary search with the exact comparator.
    long find_position(const FieldElement& pos, const FieldSpec& spec) const;

    /// Direct summation over all 2^n sign sequences, with exact merging.
    /// Independent of the step route; the oracle for it.
    static SignedMeasure expand_brute_force(const FieldSpec& spec, int n, bool signed_weights);

    /// Build from unsorted atom candidates: sort by exact comparison, merge
    /// equal positions, drop zero numerators.
    static SignedMeasure from_atoms(const FieldSpec& spec, int level, std::vector<Atom> raw);

private:
    SignedMeasure(int level, std::vector<Atom> atoms)
        : level_(level), atoms_(std::move(atoms)) {}

    SignedMeasure step(const FieldSpec& spec, bool signed_weights) const;

    int level_ = 0;
    std::vector<Atom> atoms_;
};

}  // namespace bconv
