#include "bconv/tree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bconv {

std::string word_to_string(const SignSequence& w) {
    if (w.empty()) return "0";
    std::string s;
    s.reserve(w.size());
    for (int8_t e : w) s += (e > 0 ? '+' : '-');
    return s;
}

PrunedLevel root_level(const FieldSpec& spec) {
    PrunedLevel lv;
    lv.n = 0;
    lv.survivors.push_back({});
    lv.parent_index.push_back(-1);
    lv.positions.push_back(FieldElement::zero(spec.m()));
    return lv;
}

PrunedLevel grow(const PrunedLevel& level, const FieldSpec& spec,
                 const SignedMeasure& nu_next) {
    if (nu_next.level() != level.n + 1)
        throw std::invalid_argument("grow: measure level mismatch");
    const FieldElement one = FieldElement::constant(spec.m(), Int(1));
    PrunedLevel next;
    next.n = level.n + 1;
    for (size_t i = 0; i < level.size(); ++i) {
        FieldElement up = level.positions[i].mul_by_beta();
        for (int s : {-1, +1}) {
            FieldElement child = (s < 0) ? up - one : up + one;
            if (nu_next.find_position(child, spec) < 0) continue;
            SignSequence w = level.survivors[i];
            w.push_back(static_cast<int8_t>(s));
            next.survivors.push_back(std::move(w));
            next.parent_index.push_back(static_cast<long>(i));
            next.positions.push_back(std::move(child));
        }
    }
    return next;
}

CheckReport check_isomorphism(const PrunedLevel& level, const SignedMeasure& nu,
                              const FieldSpec& spec) {
    if (level.n != nu.level())
        return {false, "level mismatch"};
    const auto& atoms = nu.atoms();
    if (level.size() != atoms.size()) {
        std::ostringstream os;
        os << "n=" << level.n << ": |D_n*|=" << level.size()
           << " but |A_n|=" << atoms.size();
        return {false, os.str()};
    }
    for (size_t i = 0; i < level.size(); ++i) {
        if (level.positions[i] != atoms[i].pos) {
            std::ostringstream os;
            os << "n=" << level.n << ": survivor " << i << " ("
               << word_to_string(level.survivors[i])
               << ") does not map to atom " << i;
            return {false, os.str()};
        }
        if (i > 0 && spec.compare(level.positions[i - 1], level.positions[i]) >= 0) {
            std::ostringstream os;
            os << "n=" << level.n << ": positions not strictly increasing at " << i;
            return {false, os.str()};
        }
    }
    return {true, ""};
}

CheckReport check_leafless(const PrunedLevel& level, const PrunedLevel& next) {
    if (next.n != level.n + 1) return {false, "level mismatch"};
    std::vector<char> has_child(level.size(), 0);
    for (long p : next.parent_index)
        if (p >= 0) has_child[static_cast<size_t>(p)] = 1;
    for (size_t i = 0; i < level.size(); ++i) {
        if (!has_child[i]) {
            std::ostringstream os;
            os << "n=" << level.n << ": leaf at "
               << word_to_string(level.survivors[i]);
            return {false, os.str()};
        }
    }
    return {true, ""};
}

namespace {

// Suffix of w (last m entries) equals s followed by m-1 copies of -s.
bool suffix_matches(const SignSequence& w, int m, int s) {
    const size_t n = w.size();
    if (static_cast<int>(n) < m) return false;
    if (w[n - m] != s) return false;
    for (size_t i = n - m + 1; i < n; ++i)
        if (w[i] != -s) return false;
    return true;
}

}  // namespace

DiamondReport check_diamond(const std::vector<PrunedLevel>& levels, int n,
                            const FieldSpec& spec) {
    const int m = spec.m();
    if (n < m || n + 1 >= static_cast<int>(levels.size()))
        return {false, 0, "need levels up to n+1 and n >= m"};
    const PrunedLevel& lv = levels[n];
    const PrunedLevel& next = levels[n + 1];

    // Which children survived, from the parent links of level n+1.
    std::vector<char> plus_alive(lv.size(), 0), minus_alive(lv.size(), 0);
    for (size_t j = 0; j < next.size(); ++j) {
        long p = next.parent_index[j];
        if (next.survivors[j].back() > 0)
            plus_alive[static_cast<size_t>(p)] = 1;
        else
            minus_alive[static_cast<size_t>(p)] = 1;
    }

    // All children of the level, tagged by parent and sign, sorted by the
    // exact position so coincidences become adjacent groups.
    struct Child {
        FieldElement pos;
        long parent;
        int sign;
    };
    const FieldElement one = FieldElement::constant(m, Int(1));
    std::vector<Child> children;
    children.reserve(2 * lv.size());
    for (size_t i = 0; i < lv.size(); ++i) {
        FieldElement up = lv.positions[i].mul_by_beta();
        children.push_back({up - one, static_cast<long>(i), -1});
        children.push_back({up + one, static_cast<long>(i), +1});
    }
    std::sort(children.begin(), children.end(), [&](const Child& a, const Child& b) {
        return spec.compare(a.pos, b.pos) < 0;
    });

    long b_n = 0;
    std::vector<char> in_pair_plus(lv.size(), 0), in_pair_minus(lv.size(), 0);
    size_t i = 0;
    while (i < children.size()) {
        size_t j = i + 1;
        while (j < children.size() && children[j].pos == children[i].pos) ++j;
        if (j - i > 1) {
            std::vector<long> plus_parents, minus_parents;
            for (size_t k = i; k < j; ++k)
                (children[k].sign > 0 ? plus_parents : minus_parents)
                    .push_back(children[k].parent);
            b_n += static_cast<long>(plus_parents.size() * minus_parents.size());
            // Verify the diamond pattern for every coinciding (a+, b-) pair.
            for (long a : plus_parents) {
                for (long b : minus_parents) {
                    in_pair_plus[static_cast<size_t>(a)] = 1;
                    in_pair_minus[static_cast<size_t>(b)] = 1;
                    const SignSequence& wa = lv.survivors[static_cast<size_t>(a)];
                    const SignSequence& wb = lv.survivors[static_cast<size_t>(b)];
                    if (!suffix_matches(wa, m, -1) || !suffix_matches(wb, m, +1) ||
                        !std::equal(wa.begin(), wa.end() - m, wb.begin())) {
                        std::ostringstream os;
                        os << "n=" << n << ": pair (" << word_to_string(wa) << ","
                           << word_to_string(wb) << ") does not match the diamond pattern";
                        return {false, b_n, os.str()};
                    }
                    // Common ancestor at level n-m must have both children alive.
                    long anc = a;
                    for (int up_ = n; up_ > n - m; --up_)
                        anc = levels[up_].parent_index[static_cast<size_t>(anc)];
                    long nkids = 0;
                    for (long p : levels[n - m + 1].parent_index)
                        if (p == anc) ++nkids;
                    if (nkids != 2) {
                        std::ostringstream os;
                        os << "n=" << n << ": ancestor of pair has " << nkids
                           << " surviving children, expected 2";
                        return {false, b_n, os.str()};
                    }
                }
            }
        }
        i = j;
    }

    // Lost children must be exactly the canceling ones, no double loss.
    for (size_t s = 0; s < lv.size(); ++s) {
        if (!plus_alive[s] && !minus_alive[s]) {
            return {false, b_n,
                    "node lost both children: " + word_to_string(lv.survivors[s])};
        }
        if ((!plus_alive[s]) != static_cast<bool>(in_pair_plus[s]) ||
            (!minus_alive[s]) != static_cast<bool>(in_pair_minus[s])) {
            return {false, b_n,
                    "lost child without canceling partner at " +
                        word_to_string(lv.survivors[s])};
        }
    }

    const long expected =
        static_cast<long>(levels[n - m + 1].size()) - static_cast<long>(levels[n - m].size());
    if (b_n != expected) {
        std::ostringstream os;
        os << "n=" << n << ": b_n=" << b_n << " but a_{n-m+1}-a_{n-m}=" << expected;
        return {false, b_n, os.str()};
    }
    const long a_next = static_cast<long>(next.size());
    if (a_next != 2 * static_cast<long>(lv.size()) - 2 * b_n) {
        std::ostringstream os;
        os << "n=" << n << ": a_{n+1} != 2 a_n - 2 b_n";
        return {false, b_n, os.str()};
    }
    return {true, b_n, ""};
}

CheckReport check_separation(const std::vector<PrunedLevel>& levels, int n0,
                             int k, const FieldSpec& spec, long max_pairs,
                             unsigned long seed) {
    const int m = spec.m();
    if (n0 + k >= static_cast<int>(levels.size()))
        return {false, "not enough levels"};
    const PrunedLevel& base = levels[n0];

    // Descendant index ranges at level n0+k; contiguous since children are
    // emitted in parent order.
    std::vector<long> lo(base.size()), hi(base.size());
    std::iota(lo.begin(), lo.end(), 0);
    std::iota(hi.begin(), hi.end(), 1);
    for (int l = n0 + 1; l <= n0 + k; ++l) {
        const auto& par = levels[l].parent_index;
        std::vector<long> nlo(base.size()), nhi(base.size());
        for (size_t i = 0; i < base.size(); ++i) {
            nlo[i] = std::lower_bound(par.begin(), par.end(), lo[i]) - par.begin();
            nhi[i] = std::lower_bound(par.begin(), par.end(), hi[i]) - par.begin();
        }
        lo = std::move(nlo);
        hi = std::move(nhi);
    }

    const PrunedLevel& deep = levels[n0 + k];
    const FieldElement one = FieldElement::constant(m, Int(1));
    auto check_pair = [&](size_t a, size_t b) -> bool {
        if (lo[a] >= hi[a] || lo[b] >= hi[b]) return true;  // vacuous (leaflessness covers it)
        const FieldElement& xa = deep.positions[static_cast<size_t>(hi[a] - 1)];
        const FieldElement& xb = deep.positions[static_cast<size_t>(lo[b])];
        int c = spec.compare(xa.mul_by_beta() + one, xb.mul_by_beta() - one);
        return k >= m ? c < 0 : c <= 0;
    };

    if (max_pairs <= 0) {
        for (size_t a = 0; a < base.size(); ++a)
            for (size_t b = a + 1; b < base.size(); ++b)
                if (!check_pair(a, b)) {
                    std::ostringstream os;
                    os << "n0=" << n0 << " k=" << k << ": separation fails for ("
                       << word_to_string(base.survivors[a]) << ","
                       << word_to_string(base.survivors[b]) << ")";
                    return {false, os.str()};
                }
    } else {
        unsigned long state = seed ? seed : 1;
        auto next_rand = [&state]() {
            state = state * 6364136223846793005ul + 1442695040888963407ul;
            return state >> 33;
        };
        for (long t = 0; t < max_pairs; ++t) {
            size_t a = next_rand() % base.size();
            size_t b = next_rand() % base.size();
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            if (!check_pair(a, b)) {
                std::ostringstream os;
                os << "n0=" << n0 << " k=" << k << ": separation fails for sampled ("
                   << word_to_string(base.survivors[a]) << ","
                   << word_to_string(base.survivors[b]) << ")";
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

CheckReport check_pruning_inequalities(const FieldSpec& spec) {
    const int m = spec.m();
    // rho - sum_{j=2..n} rho^j >= rho^{n+1}, in beta^{n+1}-scaled form:
    // beta^n - beta^{n-1} - ... - beta - 1 >= 0 for n <= m.
    for (int n = 1; n <= m; ++n) {
        std::vector<Int> raw(n + 1, Int(-1));
        raw[n] = 1;
        if (spec.sign(FieldElement::reduce(std::move(raw), m)) < 0) {
            std::ostringstream os;
            os << "first-collision inequality fails at n=" << n;
            return {false, os.str()};
        }
    }
    // sum_{j>n} rho^j < 2 rho^n reduces to beta^m > 2.
    std::vector<Int> raw(m + 1);
    raw[m] = 1;
    raw[0] = -2;
    if (spec.sign(FieldElement::reduce(std::move(raw), m)) <= 0)
        return {false, "tail-gap inequality fails: beta^m <= 2"};
    return {true, ""};
}

TreeBuild build_tree(const FieldSpec& spec, int depth) {
    TreeBuild out;
    out.measures.push_back(SignedMeasure::dirac_zero(spec));
    out.levels.push_back(root_level(spec));
    for (int n = 1; n <= depth; ++n) {
        out.measures.push_back(out.measures.back().signed_step(spec));
        out.levels.push_back(grow(out.levels.back(), spec, out.measures.back()));
    }
    return out;
}

std::string tree_to_dot(const std::vector<PrunedLevel>& levels, int depth) {
    std::ostringstream os;
    os << "digraph T {\n  rankdir=TB;\n  node [shape=point];\n";
    for (int n = 0; n <= depth && n < static_cast<int>(levels.size()); ++n) {
        for (size_t i = 0; i < levels[n].size(); ++i) {
            std::string id = "n" + std::to_string(n) + "_" + std::to_string(i);
            os << "  " << id << " [label=\"" << word_to_string(levels[n].survivors[i])
               << "\"];\n";
            if (n > 0)
                os << "  n" << (n - 1) << "_" << levels[n].parent_index[i] << " -> "
                   << id << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace bconv
