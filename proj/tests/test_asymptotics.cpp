#include "bconv/asymptotics.hpp"

#include "bconv/measure.hpp"

#include <doctest.h>

#include <random>

using namespace bconv;

TEST_CASE("recurrence values for m=2 and m=4") {
    auto r2 = recurrence(2, 10);
    const long want2[] = {1, 2, 4, 6, 8, 12, 20, 32, 48, 72, 112};
    for (int n = 0; n <= 10; ++n) CHECK(r2.values[n] == want2[n]);

    auto r4 = recurrence(4, 5);
    const long want4[] = {1, 2, 4, 8, 16, 30};
    for (int n = 0; n <= 5; ++n) CHECK(r4.values[n] == want4[n]);
}

TEST_CASE("initial segment a_n = 2^n for n <= m") {
    for (int m : {2, 4, 6, 8}) {
        auto r = recurrence(m, m);
        for (int n = 0; n <= m; ++n) CHECK(r.values[n] == Int(1) << n);
    }
}

TEST_CASE("odd m is rejected") {
    CHECK_THROWS_AS(recurrence(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(solve_real_root(5, 10), std::invalid_argument);
    CHECK_THROWS_AS(generating_function_coeffs(7, 5), std::invalid_argument);
}

TEST_CASE("recurrence vs brute-force measure expansion") {
    FieldSpec spec(2);
    auto rec = recurrence(2, 10);
    for (int n = 0; n <= 10; ++n) {
        auto bf = SignedMeasure::expand_brute_force(spec, n, true);
        Int two_n = Int(1) << n;
        Rat want(rec.values[n], two_n);
        want.canonicalize();
        CHECK(want == bf.total_variation());
    }
}

TEST_CASE("real root for m=2: lambda/2 = 0.771844...") {
    auto e = solve_real_root(2, 10);
    CHECK(e.width() <= Rat(1, 10000000000L));
    double half = e.midpoint() / 2;
    CHECK(half == doctest::Approx(0.771844).epsilon(1e-6));
    // defining equation within enclosure width
    double lam = e.midpoint();
    CHECK(std::abs(lam * lam * lam - 2 * lam * lam + 2 * lam - 2) < 1e-9);
}

TEST_CASE("real root enclosures at two precisions are nested") {
    for (int m : {2, 4, 6}) {
        auto coarse = solve_real_root(m, 8);
        auto fine = solve_real_root(m, 20);
        CHECK(coarse.lo <= fine.lo);
        CHECK(fine.hi <= coarse.hi);
    }
}

TEST_CASE("lambda_m is increasing in m and in (2(m-1)/(m+1), 2)") {
    double prev = 0;
    for (int m : {2, 4, 6, 8}) {
        auto e = solve_real_root(m, 12);
        double lam = e.midpoint();
        CHECK(lam > prev);
        CHECK(lam > 2.0 * (m - 1) / (m + 1));
        CHECK(lam < 2.0);
        prev = lam;
    }
    CHECK(solve_real_root(4, 12).midpoint() > 1.543);
}

TEST_CASE("all roots: dominance and the 3/2 bound") {
    for (int m : {2, 4, 6, 8}) {
        auto rep = solve_all_roots(m);
        CHECK(rep.square_free);
        CHECK(rep.complex_roots.size() == static_cast<size_t>(m));
        CHECK(rep.dominant);
        CHECK(rep.below_three_halves);
        CHECK(rep.interval_check);
        for (double r : rep.residuals) CHECK(r < 1e-10);
    }
    auto rep2 = solve_all_roots(2);
    CHECK(rep2.lambda == doctest::Approx(1.5436890).epsilon(1e-6));
    for (const auto& z : rep2.complex_roots)
        CHECK(std::abs(z) == doctest::Approx(1.1382432).epsilon(1e-5));
}

TEST_CASE("generating function coefficients equal the recurrence") {
    for (int m : {2, 4, 6}) {
        auto gf = generating_function_coeffs(m, 60);
        auto rec = recurrence(m, 60);
        CHECK(gf[0] == 1);
        for (int n = 0; n <= 60; ++n) CHECK(gf[n] == rec.values[n]);
    }
}

TEST_CASE("characteristic polynomial annihilates the tail") {
    std::mt19937 rng(31);
    for (int m : {2, 4}) {
        auto rec = recurrence(m, 80);
        std::uniform_int_distribution<int> d(m + 1, 80 - m - 1);
        for (int t = 0; t < 50; ++t) {
            int n = d(rng);
            // a_{n+m+1} - 2 a_{n+m} + 2 a_{n+1} - 2 a_n = 0
            Int v = rec.values[n + m + 1] - 2 * rec.values[n + m] +
                    2 * rec.values[n + 1] - 2 * rec.values[n];
            CHECK(v == 0);
        }
    }
}

TEST_CASE("constant estimate: bracket and self-consistency") {
    auto lam = solve_real_root(2, 40);
    auto t40 = recurrence(2, 40);
    auto t80 = recurrence(2, 80);
    auto r40 = estimate_constant(t40, lam);
    auto r80 = estimate_constant(t80, lam);
    CHECK(r80.bracket_width() < Rat(1, 1000000));
    CHECK(r80.c_estimate > 0);
    CHECK(r40.bracket_lo <= Rat(r80.c_estimate));
    CHECK(Rat(r80.c_estimate) <= r40.bracket_hi);
    // bracket contains its own point estimate
    double lo = r80.bracket_lo.get_d(), hi = r80.bracket_hi.get_d();
    CHECK(lo <= r80.c_estimate);
    CHECK(r80.c_estimate <= hi);
    // two precisions agree
    auto lam2 = solve_real_root(2, 60);
    auto r80b = estimate_constant(t80, lam2);
    CHECK(std::abs(r80b.c_estimate - r80.c_estimate) < 1e-9);
}

TEST_CASE("ratios are positive") {
    auto rec = recurrence(2, 40);
    auto lam = solve_real_root(2, 20);
    double l = lam.midpoint();
    double p = 1;
    for (int n = 0; n <= 40; ++n) {
        CHECK(rec.values[n].get_d() / p > 0);
        p *= l;
    }
}
