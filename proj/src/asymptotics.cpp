#include "bconv/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bconv {

namespace {

// f(z) = z^{m+1} - 2 z^m + 2 z - 2, constant term first.
std::vector<Int> char_poly(int m) {
    std::vector<Int> f(m + 2);
    f[0] = -2;
    f[1] = 2;
    f[m] += -2;
    f[m + 1] += 1;
    return f;
}

Rat eval_rat(const std::vector<Int>& f, const Rat& x) {
    Rat acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + Rat(f[i]);
    return acc;
}

std::complex<double> eval_cx(const std::vector<Int>& f, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = acc * z + f[i].get_d();
    return acc;
}

std::complex<double> eval_cx_deriv(const std::vector<Int>& f, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (size_t i = f.size(); i-- > 1;)
        acc = acc * z + static_cast<double>(i) * f[i].get_d();
    return acc;
}

int poly_degree(const std::vector<Int>& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (sgn(p[i]) != 0) return static_cast<int>(i);
    return -1;
}

void make_primitive(std::vector<Int>& p) {
    Int g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(g) == 0 || g == 1) return;
    for (auto& c : p) c /= g;
}

// Pseudo-remainder of a by b (b nonzero), over Z.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    int da = poly_degree(a), db = poly_degree(b);
    const Int lb = b[static_cast<size_t>(db)];
    while (da >= db) {
        Int la = a[static_cast<size_t>(da)];
        if (sgn(la) != 0) {
            for (int i = 0; i <= da; ++i) a[static_cast<size_t>(i)] *= lb;
            for (int i = 0; i <= db; ++i)
                a[static_cast<size_t>(da - db + i)] -= la * b[static_cast<size_t>(i)];
        }
        a[static_cast<size_t>(da)] = 0;
        da = poly_degree(a);
        if (da < 0) break;
    }
    a.resize(static_cast<size_t>(std::max(da, 0)) + 1);
    return a;
}

// True iff gcd(f, f') is constant over Z, i.e. f is square-free.
bool square_free(const std::vector<Int>& f) {
    std::vector<Int> a = f;
    std::vector<Int> b(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) b[i - 1] = Int(static_cast<long>(i)) * f[i];
    while (true) {
        int db = poly_degree(b);
        if (db < 0) return poly_degree(a) <= 0;
        if (db == 0) return true;
        std::vector<Int> r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace

RecurrenceTable recurrence(int m, int N) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("recurrence: m must be an even integer >= 2");
    if (N < 0) throw std::invalid_argument("recurrence: N must be >= 0");
    RecurrenceTable t;
    t.m = m;
    t.values.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        if (n <= m) {
            Int v = 1;
            mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), n);
            t.values.push_back(std::move(v));
        } else {
            const auto& a = t.values;
            t.values.push_back(2 * a[n - 1] - 2 * a[n - m] + 2 * a[n - m - 1]);
        }
    }
    return t;
}

RealRootEnclosure solve_real_root(int m, int digits) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("solve_real_root: m must be even >= 2");
    if (digits < 1 || digits > 10000)
        throw std::invalid_argument("solve_real_root: digits out of range");
    const auto f = char_poly(m);
    Rat width(1);
    for (int i = 0; i < digits; ++i) width /= 10;
    RealRootEnclosure e;
    e.m = m;
    e.lo = 1;
    e.hi = 2;
    // f(1) = -1 < 0, f(2) = 2 > 0
    while (e.hi - e.lo > width) {
        Rat mid = (e.lo + e.hi) / 2;
        if (sgn(eval_rat(f, mid)) < 0)
            e.lo = mid;
        else
            e.hi = mid;
    }
    Rat lower_bound(2 * (m - 1), m + 1);
    lower_bound.canonicalize();
    if (e.hi <= lower_bound)
        throw std::logic_error("solve_real_root: lambda below 2(m-1)/(m+1)");
    return e;
}

RootReport solve_all_roots(int m) {
    if (m < 2 || m % 2 != 0 || m > 12)
        throw std::invalid_argument("solve_all_roots: m must be even, 2 <= m <= 12");
    const auto f = char_poly(m);
    RootReport rep;
    rep.m = m;
    rep.square_free = square_free(f);
    if (!rep.square_free) return rep;

    const int deg = m + 1;
    // Durand-Kerner from a perturbed circle.
    std::vector<std::complex<double>> z(deg);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> p(1, 0);
    for (int i = 0; i < deg; ++i) {
        p *= seed;
        z[static_cast<size_t>(i)] = p;
    }
    for (int it = 0; it < 500; ++it) {
        double delta = 0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> num = eval_cx(f, z[i]);
            std::complex<double> den(1, 0);
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> d = num / den;
            z[i] -= d;
            delta = std::max(delta, std::abs(d));
        }
        if (delta < 1e-14) break;
    }
    // Newton polish.
    for (auto& r : z)
        for (int it = 0; it < 8; ++it) {
            std::complex<double> fp = eval_cx_deriv(f, r);
            if (std::abs(fp) == 0) break;
            r -= eval_cx(f, r) / fp;
        }

    const double lam = solve_real_root(m, 15).midpoint();
    // Separate the real dominant root from the m complex ones.
    size_t real_idx = 0;
    double best = 1e300;
    for (size_t i = 0; i < z.size(); ++i) {
        double d = std::abs(z[i] - std::complex<double>(lam, 0));
        if (d < best) {
            best = d;
            real_idx = i;
        }
    }
    rep.lambda = lam;
    for (size_t i = 0; i < z.size(); ++i) {
        if (i == real_idx) continue;
        rep.complex_roots.push_back(z[i]);
        rep.residuals.push_back(std::abs(eval_cx(f, z[i])));
        rep.max_complex_modulus = std::max(rep.max_complex_modulus, std::abs(z[i]));
    }
    rep.dominant = rep.max_complex_modulus < lam;
    rep.below_three_halves = rep.max_complex_modulus < 1.5;
    rep.interval_check = lam > 2.0 * (m - 1) / (m + 1) && lam < 2.0;
    return rep;
}

std::vector<Int> generating_function_coeffs(int m, int N) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("generating_function_coeffs: m must be even >= 2");
    if (N < 0) throw std::invalid_argument("generating_function_coeffs: N must be >= 0");
    // numerator 1 + 2 z^m; denominator 1 - 2z + 2 z^m - 2 z^{m+1}
    std::vector<Int> den(static_cast<size_t>(m) + 2);
    den[0] = 1;
    den[1] = -2;
    den[static_cast<size_t>(m)] += 2;
    den[static_cast<size_t>(m) + 1] += -2;
    std::vector<Int> a;
    a.reserve(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        Int v = 0;
        if (n == 0) v += 1;
        if (n == m) v += 2;
        for (int k = 1; k <= std::min(n, m + 1); ++k)
            v -= den[static_cast<size_t>(k)] * a[static_cast<size_t>(n - k)];
        a.push_back(std::move(v));
    }
    return a;
}

AsymptoticsReport estimate_constant(const RecurrenceTable& table,
                                    const RealRootEnclosure& lambda) {
    const int m = table.m;
    if (lambda.m != m)
        throw std::invalid_argument("estimate_constant: m mismatch");
    const int N = static_cast<int>(table.values.size()) - 1;
    if (N < 2 * m + 1)
        throw std::invalid_argument("estimate_constant: table too short (need >= 2m+2)");

    AsymptoticsReport rep;
    rep.m = m;
    rep.n_used = N;

    // Ratio intervals a_k / lambda^k over the last m+1 indices. Powers are
    // built incrementally from k = N-m.
    Rat lo_pow = 1, hi_pow = 1;
    for (int i = 0; i < N - m; ++i) {
        lo_pow *= lambda.lo;
        hi_pow *= lambda.hi;
    }
    bool first = true;
    for (int k = N - m; k <= N; ++k) {
        Rat r_lo = Rat(table.values[static_cast<size_t>(k)]) / hi_pow;
        Rat r_hi = Rat(table.values[static_cast<size_t>(k)]) / lo_pow;
        if (first || r_lo < rep.bracket_lo) rep.bracket_lo = r_lo;
        if (first || r_hi > rep.bracket_hi) rep.bracket_hi = r_hi;
        first = false;
        lo_pow *= lambda.lo;
        hi_pow *= lambda.hi;
    }
    Rat mid = (lambda.lo + lambda.hi) / 2;
    Rat pw = 1;
    for (int i = 0; i < N; ++i) pw *= mid;
    rep.c_estimate = Rat(Rat(table.values.back()) / pw).get_d();
    return rep;
}

}  // namespace bconv
