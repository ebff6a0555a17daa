#include "bconv/oddm.hpp"

#include "bconv/measure.hpp"

#include <doctest.h>

using namespace bconv;

TEST_CASE("even m=2: first witness is (1,-1,-1) at n=3") {
    auto w = search_witness(2, 3);
    REQUIRE(w.has_value());
    CHECK(w->n == 3);
    CHECK(w->eta == std::vector<int8_t>({1, -1, -1}));
    // residual is zero and parity odd by construction; re-check explicitly
    FieldSpec spec(2);
    std::vector<Int> raw(3);
    int par = 0;
    for (int j = 1; j <= 3; ++j) {
        raw[3 - j] += w->eta[j - 1];
        par += w->eta[j - 1] != 0;
    }
    CHECK(FieldElement::reduce(raw, 2).is_zero());
    CHECK(par % 2 == 1);
}

TEST_CASE("even m: witness length is exactly m+1") {
    for (int m : {2, 4, 6}) {
        auto w = search_witness(m, m + 3);
        REQUIRE(w.has_value());
        CHECK(w->n == m + 1);
        // the Lemma-3 pattern: (1, -1, ..., -1)
        CHECK(w->eta[0] == 1);
        for (int j = 1; j <= m; ++j) CHECK(w->eta[j] == -1);
    }
}

TEST_CASE("no witness of length 1 for any m") {
    for (int m : {2, 3, 4, 5}) CHECK_FALSE(search_witness(m, 1).has_value());
}

TEST_CASE("odd m=3: no witness up to n=14") {
    CHECK_FALSE(search_witness(3, 14).has_value());
}

TEST_CASE("odd m=5: no witness up to n=12") {
    CHECK_FALSE(search_witness(5, 12).has_value());
}

TEST_CASE("no-decay verification for m=3 and m=5") {
    auto r3 = verify_no_decay(3, 12);
    CHECK(r3.pass);
    CHECK(r3.max_n_checked == 12);
    auto r5 = verify_no_decay(5, 10);
    CHECK(r5.pass);
    CHECK(r5.max_n_checked == 10);
}

TEST_CASE("no-decay agrees with the measure module") {
    FieldSpec spec(3);
    SignedMeasure nu = SignedMeasure::dirac_zero(spec);
    for (int n = 1; n <= 10; ++n) {
        nu = nu.signed_step(spec);
        CHECK(nu.total_variation() == 1);
    }
}

TEST_CASE("parity argument for m=3") {
    auto r = verify_parity_argument(3, 12);
    CHECK(r.pass);
    CHECK(r.max_n_checked == 12);
    CHECK(r.coincidences > 0);
}

TEST_CASE("m=3, n=4: the defining coincidence exists") {
    // x_{(-,+,+,+)} = x_{(+,-,-,-)} from beta^3 = beta^2 + beta + 1
    FieldSpec spec(3);
    std::vector<Int> a(4), b(4);
    int sa[] = {-1, 1, 1, 1}, sb[] = {1, -1, -1, -1};
    for (int j = 1; j <= 4; ++j) {
        a[4 - j] += sa[j - 1];
        b[4 - j] += sb[j - 1];
    }
    CHECK(FieldElement::reduce(a, 3) == FieldElement::reduce(b, 3));
    // and the measure shows a coincidence: fewer than 2^4 atoms
    SignedMeasure nu = SignedMeasure::expand_brute_force(spec, 4, true);
    CHECK(nu.atoms().size() < 16);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(search_witness(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_no_decay(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_parity_argument(2, 5), std::invalid_argument);
}
