#include "bconv/verify.hpp"

#include "bconv/asymptotics.hpp"
#include "bconv/field.hpp"
#include "bconv/measure.hpp"
#include "bconv/oddm.hpp"
#include "bconv/tree.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace bconv {

namespace {

class Suite {
public:
    void line(const std::string& name, bool ok, const std::string& detail = "") {
        os_ << (ok ? "PASS" : "FAIL") << " " << name;
        if (!detail.empty()) os_ << ": " << detail;
        os_ << "\n";
        pass_ = pass_ && ok;
    }

    VerifySuiteResult result() const { return {pass_, os_.str()}; }

private:
    std::ostringstream os_;
    bool pass_ = true;
};

void verify_even(Suite& s, int m, int depth, int brute_depth, unsigned long seed) {
    FieldSpec spec(m);
    auto rec = recurrence(m, depth);
    TreeBuild tb = build_tree(spec, depth);

    // a_n = 2^n ||nu^(n)|| from the stepped measure, against the recurrence.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= depth && ok; ++n) {
            Int two_n = 1;
            mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), n);
            Rat got = tb.measures[n].total_variation() * Rat(two_n);
            if (got != Rat(rec.values[n])) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n);
            }
        }
        s.line("recurrence-vs-stepped-measure", ok, detail);
    }

    // Brute-force expansion over 2^n sequences, independent route.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= brute_depth && ok; ++n) {
            SignedMeasure bf = SignedMeasure::expand_brute_force(spec, n, true);
            if (!(bf == tb.measures[n])) {
                ok = false;
                detail = "expansion differs from stepped measure at n=" + std::to_string(n);
            }
        }
        s.line("brute-force-expansion", ok, detail);
    }

    // Lemma: D_n* = D_n for n <= m; level m+1 drops exactly (-,+,..,+),(+,-,..,-).
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= m && n <= depth; ++n) {
            if (tb.levels[n].size() != (size_t(1) << n)) {
                ok = false;
                detail = "|D_n*| != 2^n at n=" + std::to_string(n);
            }
        }
        if (ok && depth >= m + 1) {
            SignSequence wa(m + 1, int8_t(1)), wb(m + 1, int8_t(-1));
            wa[0] = -1;
            wb[0] = 1;
            size_t found = 0;
            for (const auto& w : tb.levels[m + 1].survivors)
                if (w == wa || w == wb) ++found;
            if (tb.levels[m + 1].size() != (size_t(1) << (m + 1)) - 2 || found != 0) {
                ok = false;
                detail = "level m+1 does not drop exactly the two extremal words";
            }
        }
        s.line("first-pruning", ok, detail);
    }

    // Order-preserving bijection survivors <-> atoms, every level.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= depth && ok; ++n) {
            auto r = check_isomorphism(tb.levels[n], tb.measures[n], spec);
            if (!r.pass) {
                ok = false;
                detail = r.detail;
            }
        }
        s.line("tree-isomorphism", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n < depth && ok; ++n) {
            auto r = check_leafless(tb.levels[n], tb.levels[n + 1]);
            if (!r.pass) {
                ok = false;
                detail = r.detail;
            }
        }
        s.line("leaflessness", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (int n = m; n < depth && ok; ++n) {
            auto r = check_diamond(tb.levels, n, spec);
            if (!r.pass) {
                ok = false;
                detail = r.detail;
            }
        }
        s.line("diamond-pattern", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        const int kmax = std::min(4, depth);
        for (int n0 = 1; n0 + kmax <= depth && ok; ++n0) {
            for (int k = 0; k <= kmax && ok; ++k) {
                // Exhaustive while the level is small, sampled beyond.
                long cap = tb.levels[n0].size() <= 128 ? 0 : 2000;
                auto r = check_separation(tb.levels, n0, k, spec, cap, seed);
                if (!r.pass) {
                    ok = false;
                    detail = r.detail;
                }
            }
        }
        s.line("separation", ok, detail);
    }

    {
        auto r = check_pruning_inequalities(spec);
        s.line("pruning-inequalities", r.pass, r.detail);
    }

    // Even m: all numerators of nu^(n) are +-1.
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= depth && ok; ++n)
            for (const auto& at : tb.measures[n].atoms())
                if (abs(at.num) != 1) {
                    ok = false;
                    detail = "non-unit numerator at n=" + std::to_string(n);
                    break;
                }
        s.line("unit-numerators", ok, detail);
    }
}

void verify_odd(Suite& s, int m, int depth, int brute_depth) {
    auto nd = verify_no_decay(m, depth);
    s.line("no-decay", nd.pass, nd.detail);
    auto pr = verify_parity_argument(m, std::min(brute_depth, depth));
    s.line("parity-argument", pr.pass, pr.detail);
    auto w = search_witness(m, std::min(depth + 2, 14));
    s.line("no-cancellation-witness", !w.has_value(),
           w ? "unexpected witness at n=" + std::to_string(w->n) : "");
}

}  // namespace

VerifySuiteResult run_verify_suite(int m, int depth, int brute_depth,
                                   unsigned long seed) {
    Suite s;
    if (m % 2 == 0)
        verify_even(s, m, depth, brute_depth, seed);
    else
        verify_odd(s, m, depth, brute_depth);
    return s.result();
}

}  // namespace bconv
