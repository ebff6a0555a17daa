#pragma once

#include "bconv/field.hpp"
#include "bconv/measure.hpp"

#include <vector>

namespace bconv {

struct SineProductScan {
    int m = 0;
    int n = 0;
    double xi_max = 0;
    long samples = 0;
    double max_abs = 0;
    double argmax_xi = 0;
    Rat bound;       // ||nu^{(n)}||, exact
    bool refined = false;
    bool bound_ok = false;  // max_abs <= bound as doubles, zero tolerance
};

/// F_n(beta; xi) = prod_{j=1..n} sin(2 pi beta^{-j} xi), beta the degree-m
/// multinacci number approximated from a refined enclosure.
double eval_sine_product(const FieldSpec& spec, int n, double xi);

/// Default scan window: 10 * beta^n capped at 1e4.
double default_xi_max(const FieldSpec& spec, int n);

/**
 * Uniform grid over [0, xi_max] followed by golden-section refinement of
 * |F_n| around the coarse argmax. The sampled max is a lower bound for the
 * sup, so max_abs <= bound must always hold; a violation indicates a bug
 * and throws std::runtime_error.
 */
SineProductScan scan(const FieldSpec& spec, int n, double xi_max, long samples,
                     const Rat& bound);

/// |nu^{(n)}^(xi)| by direct summation over atoms; equals |F_n(beta;xi)|
/// up to float error. Used to cross-validate the product formula.
double fourier_modulus(const SignedMeasure& nu, const FieldSpec& spec, double xi);

}  // namespace bconv
