#include "bconv/measure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bconv {

SignedMeasure SignedMeasure::dirac_zero(const FieldSpec& spec) {
    std::vector<Atom> a;
    a.push_back({FieldElement::zero(spec.m()), Int(1)});
    return SignedMeasure(0, std::move(a));
}

SignedMeasure SignedMeasure::from_atoms(const FieldSpec& spec, int level,
                                        std::vector<Atom> raw) {
    // Merge by canonical coefficient vector first (coefficient-wise compare,
    // no sign oracle needed for equality), then order the distinct positions
    // by value with the exact comparator.
    std::map<std::vector<Int>, Int> acc;
    for (auto& at : raw) acc[at.pos.coeffs()] += at.num;
    std::vector<Atom> merged;
    merged.reserve(acc.size());
    for (auto& [c, num] : acc) {
        if (sgn(num) == 0) continue;
        merged.push_back({FieldElement(c), std::move(num)});
    }
    std::sort(merged.begin(), merged.end(), [&](const Atom& a, const Atom& b) {
        return spec.compare(a.pos, b.pos) < 0;
    });
    return SignedMeasure(level, std::move(merged));
}

SignedMeasure SignedMeasure::step(const FieldSpec& spec, bool signed_weights) const {
    // Level n atom at elem*beta^{-n} spawns, at level n+1,
    // (elem*beta + 1) and (elem*beta - 1) in beta^{n+1}-scaled form.
    const FieldElement one = FieldElement::constant(spec.m(), Int(1));
    std::vector<Atom> raw;
    raw.reserve(2 * atoms_.size());
    for (const auto& at : atoms_) {
        if (at.pos.degree_bound() != spec.m())
            throw std::invalid_argument("step: FieldSpec mismatch");
        FieldElement up = at.pos.mul_by_beta();
        raw.push_back({up + one, at.num});
        raw.push_back({up - one, signed_weights ? Int(-at.num) : at.num});
    }
    return from_atoms(spec, level_ + 1, std::move(raw));
}

SignedMeasure SignedMeasure::signed_step(const FieldSpec& spec) const {
    return step(spec, true);
}

SignedMeasure SignedMeasure::unsigned_step(const FieldSpec& spec) const {
    return step(spec, false);
}

Rat SignedMeasure::total_variation() const {
    Int s = 0;
    for (const auto& at : atoms_) s += abs(at.num);
    Int unit = 1;
    mpz_mul_2exp(unit.get_mpz_t(), unit.get_mpz_t(), level_);
    Rat tv(s, unit);
    tv.canonicalize();
    return tv;
}

std::vector<ScaledPoint> SignedMeasure::support_positions() const {
    std::vector<ScaledPoint> out;
    out.reserve(atoms_.size());
    for (const auto& at : atoms_) out.push_back({at.pos, level_});
    return out;
}

SignedMeasure SignedMeasure::variation_measure() const {
    std::vector<Atom> out = atoms_;
    for (auto& at : out) at.num = abs(at.num);
    return SignedMeasure(level_, std::move(out));
}

bool SignedMeasure::operator==(const SignedMeasure& rhs) const {
    if (level_ != rhs.level_ || atoms_.size() != rhs.atoms_.size()) return false;
    for (size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i].num != rhs.atoms_[i].num || atoms_[i].pos != rhs.atoms_[i].pos)
            return false;
    return true;
}

long SignedMeasure::find_position(const FieldElement& pos, const FieldSpec& spec) const {
    long lo = 0, hi = static_cast<long>(atoms_.size()) - 1;
    while (lo <= hi) {
        long mid = lo + (hi - lo) / 2;
        int c = spec.compare(atoms_[mid].pos, pos);
        if (c == 0) return mid;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return -1;
}

SignedMeasure SignedMeasure::expand_brute_force(const FieldSpec& spec, int n,
                                                bool signed_weights) {
    if (n < 0) throw std::invalid_argument("expand_brute_force: n must be >= 0");
    if (n > 24) throw std::invalid_argument("expand_brute_force: n too large");
    const int m = spec.m();
    std::vector<Atom> raw;
    raw.reserve(size_t(1) << n);
    for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
        // bit j set means epsilon_{j+1} = +1; x_eps * beta^n = sum eps_j beta^{n-j}
        std::vector<Int> c(n == 0 ? 1 : n);
        int prod = 1;
        for (int j = 1; j <= n; ++j) {
            int e = (bits >> (j - 1)) & 1 ? 1 : -1;
            c[n - j] += e;
            prod *= e;
        }
        raw.push_back({FieldElement::reduce(std::move(c), m),
                       Int(signed_weights ? prod : 1)});
    }
    return from_atoms(spec, n, std::move(raw));
}

}  // namespace bconv
