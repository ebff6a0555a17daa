#include "bconv/tree.hpp"

#include "bconv/asymptotics.hpp"

#include <doctest.h>

using namespace bconv;

TEST_CASE("first pruning at m=2: D_3* excludes (-,+,+) and (+,-,-)") {
    FieldSpec spec(2);
    TreeBuild tb = build_tree(spec, 5);
    CHECK(tb.levels[1].size() == 2);
    CHECK(tb.levels[2].size() == 4);
    REQUIRE(tb.levels[3].size() == 6);
    for (const auto& w : tb.levels[3].survivors) {
        CHECK(w != SignSequence({-1, 1, 1}));
        CHECK(w != SignSequence({1, -1, -1}));
    }
    CHECK(tb.levels[4].size() == 8);
    CHECK(tb.levels[5].size() == 12);
}

TEST_CASE("unpruned prefix: |D_n*| = 2^n for n <= m") {
    for (int m : {2, 4, 6}) {
        FieldSpec spec(m);
        TreeBuild tb = build_tree(spec, m);
        for (int n = 0; n <= m; ++n) CHECK(tb.levels[n].size() == (size_t(1) << n));
    }
}

TEST_CASE("level sizes track the recurrence") {
    for (int m : {2, 4}) {
        const int depth = m == 2 ? 14 : 12;
        FieldSpec spec(m);
        TreeBuild tb = build_tree(spec, depth);
        auto rec = recurrence(m, depth);
        for (int n = 0; n <= depth; ++n)
            CHECK(Int(static_cast<long>(tb.levels[n].size())) == rec.values[n]);
    }
}

TEST_CASE("isomorphism: lex survivors map onto sorted atoms") {
    FieldSpec spec(2);
    TreeBuild tb = build_tree(spec, 14);
    for (int n = 0; n <= 14; ++n)
        CHECK(check_isomorphism(tb.levels[n], tb.measures[n], spec).pass);

    FieldSpec spec4(4);
    TreeBuild tb4 = build_tree(spec4, 12);
    for (int n = 0; n <= 12; ++n)
        CHECK(check_isomorphism(tb4.levels[n], tb4.measures[n], spec4).pass);
}

TEST_CASE("isomorphism detects a broken level") {
    FieldSpec spec(2);
    TreeBuild tb = build_tree(spec, 3);
    PrunedLevel broken = tb.levels[3];
    std::swap(broken.positions[0], broken.positions[1]);
    CHECK_FALSE(check_isomorphism(broken, tb.measures[3], spec).pass);
}

TEST_CASE("leaflessness") {
    FieldSpec spec(2);
    TreeBuild tb = build_tree(spec, 14);
    for (int n = 0; n < 14; ++n)
        CHECK(check_leafless(tb.levels[n], tb.levels[n + 1]).pass);

    FieldSpec spec4(4);
    TreeBuild tb4 = build_tree(spec4, 12);
    for (int n = 0; n < 12; ++n)
        CHECK(check_leafless(tb4.levels[n], tb4.levels[n + 1]).pass);
}

TEST_CASE("diamond pattern and b_n accounting for m=2") {
    FieldSpec spec(2);
    TreeBuild tb = build_tree(spec, 14);
    auto r2 = check_diamond(tb.levels, 2, spec);
    CHECK(r2.pass);
    CHECK(r2.b_n == 1);
    auto r3 = check_diamond(tb.levels, 3, spec);
    CHECK(r3.pass);
    CHECK(r3.b_n == 2);
    for (int n = 4; n < 14; ++n) {
        auto r = check_diamond(tb.levels, n, spec);
        CHECK(r.pass);
        // b_n = a_{n-1} - a_{n-2} for m=2
        CHECK(r.b_n == static_cast<long>(tb.levels[n - 1].size()) -
                           static_cast<long>(tb.levels[n - 2].size()));
    }
}

TEST_CASE("no cancellation below level m") {
    FieldSpec spec4(4);
    TreeBuild tb = build_tree(spec4, 6);
    // n < m: every child survives, i.e. levels double
    for (int n = 0; n < 4; ++n)
        CHECK(tb.levels[n + 1].size() == 2 * tb.levels[n].size());
    auto r = check_diamond(tb.levels, 4, spec4);
    CHECK(r.pass);
    CHECK(r.b_n == 1);
}

TEST_CASE("separation: exhaustive for m=2 up to level 10, k <= 4") {
    FieldSpec spec(2);
    TreeBuild tb = build_tree(spec, 14);
    for (int n0 = 1; n0 <= 10; ++n0)
        for (int k = 0; k <= 4; ++k)
            CHECK(check_separation(tb.levels, n0, k, spec).pass);
}

TEST_CASE("separation: sampled for m=4") {
    FieldSpec spec(4);
    TreeBuild tb = build_tree(spec, 9);
    for (int n0 = 1; n0 <= 5; ++n0)
        for (int k = 0; k <= 4; ++k)
            CHECK(check_separation(tb.levels, n0, k, spec, 500, 77).pass);
}

TEST_CASE("exact pruning inequalities") {
    for (int m : {2, 3, 4, 5, 6}) {
        FieldSpec spec(m);
        CHECK(check_pruning_inequalities(spec).pass);
    }
}

TEST_CASE("dump format basics") {
    FieldSpec spec(2);
    TreeBuild tb = build_tree(spec, 3);
    CHECK(word_to_string(tb.levels[0].survivors[0]) == "0");
    CHECK(word_to_string(SignSequence({1, -1, -1, 1})) == "+--+");
    auto dot = tree_to_dot(tb.levels, 3);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
