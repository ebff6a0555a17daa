#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace bconv {

using Int = mpz_class;
using Rat = mpq_class;

/// Closed rational interval. Endpoints are exact.
struct RatInterval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

class FieldSpec;

/**
 * An element of Z[beta], beta the degree-m multinacci number, stored as a
 * canonical integer coefficient vector (c_0, ..., c_{m-1}) meaning
 * c_0 + c_1*beta + ... + c_{m-1}*beta^{m-1}. Reduction by the minimal
 * polynomial x^m - x^{m-1} - ... - x - 1 is applied eagerly, so two elements
 * are equal as real numbers iff their coefficient vectors are equal.
 */
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(std::vector<Int> canonical_coeffs)
        : coeffs_(std::move(canonical_coeffs)) {}

    static FieldElement zero(int m) { return FieldElement(std::vector<Int>(m)); }
    static FieldElement constant(int m, Int c);

    /// Reduce a raw coefficient vector of any degree modulo the minimal
    /// polynomial of the degree-m multinacci number.
    static FieldElement reduce(std::vector<Int> raw, int m);

    int degree_bound() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator-() const;
    FieldElement mul_by_beta() const;
    FieldElement mul(const FieldElement& rhs) const;

    bool operator==(const FieldElement& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    std::vector<Int> coeffs_;
};

/**
 * The multinacci parameter: degree m, the minimal polynomial
 * m(x) = x^m - x^{m-1} - ... - x - 1, and a shrinkable rational interval
 * enclosure of its unique root beta in (1,2).
 *
 * The enclosure is shared, monotonically refined state; the observable
 * contract of sign() and refined() is purely functional.
 */
class FieldSpec {
public:
    /// Throws std::invalid_argument for m < 2. For m <= 8 the minimal
    /// polynomial is certified irreducible by exhaustive factor search;
    /// larger m is rejected (exact zero-testing would be unsound without
    /// the certificate).
    explicit FieldSpec(int m);

    int m() const { return m_; }
    bool even_m() const { return m_ % 2 == 0; }

    /// Coefficients of m(x), constant term first: (-1, ..., -1, 1).
    std::vector<Int> min_poly() const;

    RatInterval beta_enclosure() const;

    /// Shrink the shared enclosure to at most `width` and return a spec
    /// observing it. Bisection on m(x) over the current bracket.
    FieldSpec refined(const Rat& width) const;

    /// Exact sign of the real number a represents: -1, 0, or +1.
    /// Zero iff all coefficients are zero; otherwise interval evaluation
    /// over the enclosure, bisecting until the sign is decided.
    int sign(const FieldElement& a) const;

    /// sign(a - b); the ordering primitive for positions at a fixed level.
    int compare(const FieldElement& a, const FieldElement& b) const;

    /// Double approximation of beta from an enclosure of relative width
    /// below 1e-16.
    double beta_double() const;

private:
    struct Enclosure {
        std::mutex mu;
        Rat lo, hi;
    };

    void refine_to(const Rat& width) const;
    static int interval_sign(const std::vector<Int>& coeffs, const Rat& lo, const Rat& hi);

    int m_ = 0;
    std::shared_ptr<Enclosure> enc_;
};

/// Evaluate a canonical element at a double approximation of beta.
double eval_double(const FieldElement& a, double beta);

/// True if x^m - x^{m-1} - ... - 1 has no integer-polynomial factor of
/// degree in [1, m-1]. Exhaustive search over monic candidate divisors with
/// coefficients bounded via the root bound |z| < 2.
bool multinacci_poly_irreducible(int m);

}  // namespace bconv
