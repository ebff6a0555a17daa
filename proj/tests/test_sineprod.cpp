#include "bconv/sineprod.hpp"

#include "bconv/asymptotics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bconv;

TEST_CASE("xi = 0 kills every factor") {
    FieldSpec spec(2);
    for (int n : {1, 5, 10}) CHECK(eval_sine_product(spec, n, 0.0) == 0.0);
}

TEST_CASE("single factor attains 1 at xi = beta/4") {
    FieldSpec spec(2);
    double beta = spec.beta_double();
    CHECK(eval_sine_product(spec, 1, beta / 4) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("scan at n=1 finds the full sine maximum") {
    FieldSpec spec(2);
    auto s = scan(spec, 1, 2.0, 2000, Rat(1));
    CHECK(s.max_abs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(s.bound_ok);
}

TEST_CASE("m=2 n=10: sampled max below 112/1024") {
    FieldSpec spec(2);
    auto rec = recurrence(2, 10);
    Rat bound(rec.values[10], Int(1) << 10);
    bound.canonicalize();
    CHECK(bound == Rat(7, 64));
    auto s = scan(spec, 10, default_xi_max(spec, 10), 200000, bound);
    CHECK(s.bound_ok);
    CHECK(s.max_abs <= 0.109375);
    // the refined value at the argmax also respects the bound
    CHECK(std::fabs(eval_sine_product(spec, 10, s.argmax_xi)) <= 0.109375);
}

TEST_CASE("bound holds for every sampled xi, m in {2,4}, n <= 14") {
    for (int m : {2, 4}) {
        FieldSpec spec(m);
        auto rec = recurrence(m, 14);
        std::mt19937 rng(5);
        for (int n : {2, 6, 10, 14}) {
            Rat bound(rec.values[n], Int(1) << n);
            bound.canonicalize();
            double b = bound.get_d();
            std::uniform_real_distribution<double> d(0.0, default_xi_max(spec, n));
            for (int t = 0; t < 3000; ++t)
                CHECK(std::fabs(eval_sine_product(spec, n, d(rng))) <= b);
        }
    }
}

TEST_CASE("evenness: |F_n(-xi)| = |F_n(xi)|") {
    FieldSpec spec(2);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(0.0, 100.0);
    for (int t = 0; t < 200; ++t) {
        double xi = d(rng);
        double plus = eval_sine_product(spec, 7, xi);
        double minus = eval_sine_product(spec, 7, -xi);
        CHECK(std::fabs(minus) == doctest::Approx(std::fabs(plus)).epsilon(1e-12));
        // F_n(-xi) = (-1)^n F_n(xi)
        CHECK(minus == doctest::Approx(-plus).epsilon(1e-10));
    }
}

TEST_CASE("factorization F_{n+1} = F_n * sin(2 pi beta^{-(n+1)} xi)") {
    FieldSpec spec(2);
    double beta = spec.beta_double();
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> d(0.0, 500.0);
    for (int t = 0; t < 500; ++t) {
        double xi = d(rng);
        for (int n : {1, 4, 9}) {
            double lhs = eval_sine_product(spec, n + 1, xi);
            double rhs = eval_sine_product(spec, n, xi) *
                         std::sin(2 * M_PI * std::pow(beta, -(n + 1)) * xi);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("Fourier transform of nu matches the product in modulus") {
    for (int m : {2, 3}) {
        FieldSpec spec(m);
        SignedMeasure nu = SignedMeasure::dirac_zero(spec);
        for (int i = 0; i < 8; ++i) nu = nu.signed_step(spec);
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> d(0.0, 50.0);
        for (int t = 0; t < 100; ++t) {
            double xi = d(rng);
            double lhs = fourier_modulus(nu, spec, xi);
            double rhs = std::fabs(eval_sine_product(spec, 8, xi));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("scan rejects bad arguments") {
    FieldSpec spec(2);
    CHECK_THROWS_AS(scan(spec, 3, 10.0, 1, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(scan(spec, 3, -1.0, 100, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(eval_sine_product(spec, 0, 1.0), std::invalid_argument);
}
