#include "bconv/sineprod.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bconv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double eval_sine_product(const FieldSpec& spec, int n, double xi) {
    if (n < 1) throw std::invalid_argument("eval_sine_product: n must be >= 1");
    const double rho = 1.0 / spec.beta_double();
    double p = 1.0;
    double rj = 1.0;
    for (int j = 1; j <= n; ++j) {
        rj *= rho;
        p *= std::sin(kTwoPi * rj * xi);
    }
    return p;
}

double default_xi_max(const FieldSpec& spec, int n) {
    double w = 10.0 * std::pow(spec.beta_double(), n);
    return std::min(w, 1e4);
}

SineProductScan scan(const FieldSpec& spec, int n, double xi_max, long samples,
                     const Rat& bound) {
    if (samples < 2) throw std::invalid_argument("scan: samples must be >= 2");
    if (!(xi_max > 0)) throw std::invalid_argument("scan: xi_max must be positive");

    SineProductScan s;
    s.m = spec.m();
    s.n = n;
    s.xi_max = xi_max;
    s.samples = samples;
    s.bound = bound;

    const double step = xi_max / static_cast<double>(samples - 1);
    double best = 0, best_xi = 0;
    for (long i = 0; i < samples; ++i) {
        double xi = static_cast<double>(i) * step;
        double v = std::fabs(eval_sine_product(spec, n, xi));
        if (v > best) {
            best = v;
            best_xi = xi;
        }
    }

    // Golden-section refinement of |F_n| in the bracket around the coarse argmax.
    double a = std::max(0.0, best_xi - step);
    double b = std::min(xi_max, best_xi + step);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = std::fabs(eval_sine_product(spec, n, x1));
    double f2 = std::fabs(eval_sine_product(spec, n, x2));
    while (b - a > 1e-9) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = std::fabs(eval_sine_product(spec, n, x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = std::fabs(eval_sine_product(spec, n, x1));
        }
    }
    double refined = std::max(f1, f2);
    if (refined > best) {
        best = refined;
        best_xi = (a + b) / 2;
    }
    s.max_abs = best;
    s.argmax_xi = best_xi;
    s.refined = true;
    s.bound_ok = best <= bound.get_d();
    if (!s.bound_ok) {
        std::ostringstream os;
        os << "sine-product bound violated: max |F_" << n << "| = " << best
           << " > ||nu^(" << n << ")|| = " << bound.get_str();
        throw std::runtime_error(os.str());
    }
    return s;
}

double fourier_modulus(const SignedMeasure& nu, const FieldSpec& spec, double xi) {
    const double beta = spec.beta_double();
    const double scale = std::pow(beta, -nu.level());
    const double unit = std::ldexp(1.0, -nu.level());
    double re = 0, im = 0;
    for (const auto& at : nu.atoms()) {
        double x = eval_double(at.pos, beta) * scale;
        double w = at.num.get_d() * unit;
        re += w * std::cos(kTwoPi * x * xi);
        im += w * std::sin(kTwoPi * x * xi);
    }
    return std::hypot(re, im);
}

}  // namespace bconv
