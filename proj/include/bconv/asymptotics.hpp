#pragma once

#include "bconv/field.hpp"

#include <complex>
#include <vector>

namespace bconv {

/// a_n = 2^n * ||nu^{(n)}|| for even m: a_n = 2^n for n <= m, then
/// a_n = 2 a_{n-1} - 2 a_{n-m} + 2 a_{n-m-1}.
struct RecurrenceTable {
    int m = 0;
    std::vector<Int> values;  // a_0 .. a_N
};

/// Throws std::invalid_argument for odd m (the recurrence holds only for
/// even m) or negative N.
RecurrenceTable recurrence(int m, int N);

/// Rational enclosure of the unique real root lambda of
/// x^{m+1} = 2 x^m - 2 x + 2 in (1,2), of width <= 10^-digits.
/// Asserts lambda > 2(m-1)/(m+1).
struct RealRootEnclosure {
    int m = 0;
    Rat lo, hi;

    Rat width() const { return hi - lo; }
    double midpoint() const { return Rat((lo + hi) / 2).get_d(); }
};
RealRootEnclosure solve_real_root(int m, int digits);

struct RootReport {
    int m = 0;
    double lambda = 0;
    std::vector<std::complex<double>> complex_roots;  // the m non-real roots
    std::vector<double> residuals;                    // |f(z_j)| after polishing
    double max_complex_modulus = 0;
    bool dominant = false;        // max complex modulus < lambda
    bool below_three_halves = false;
    bool interval_check = false;  // lambda in (2(m-1)/(m+1), 2)
    bool square_free = false;     // gcd(f, f') constant over Z
};

/// All m+1 roots of the characteristic polynomial by Durand-Kerner
/// iteration with Newton polishing. m even, m <= 12.
RootReport solve_all_roots(int m);

/// First N+1 Taylor coefficients of
/// F(z) = (1 + 2 z^m) / (1 - 2 z + 2 z^m - 2 z^{m+1}), exact.
std::vector<Int> generating_function_coeffs(int m, int N);

struct AsymptoticsReport {
    int m = 0;
    int n_used = 0;
    double c_estimate = 0;  // a_N * lambda^{-N}
    Rat bracket_lo, bracket_hi;

    Rat bracket_width() const { return bracket_hi - bracket_lo; }
};

/// Bracket for the constant C in a_n ~ C lambda^n, from the rational
/// interval ratios a_k / lambda^k over the last m+1 indices of the table.
AsymptoticsReport estimate_constant(const RecurrenceTable& table,
                                    const RealRootEnclosure& lambda);

}  // namespace bconv
