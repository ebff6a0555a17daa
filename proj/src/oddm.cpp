#include "bconv/oddm.hpp"

#include "bconv/measure.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bconv {

namespace {

// Decode a base-3 code into eta digits, most significant first; digit d
// maps to d-1, so ascending codes enumerate eta words in lex order with
// -1 < 0 < +1.
std::vector<int8_t> decode(unsigned long code, int len) {
    std::vector<int8_t> w(static_cast<size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<int8_t>(code % 3) - 1;
        code /= 3;
    }
    return w;
}

unsigned long pow3(int k) {
    unsigned long p = 1;
    while (k-- > 0) p *= 3;
    return p;
}

// sum over positions j = first..last of eta_j * beta^{n-j}, reduced.
FieldElement partial_value(const std::vector<int8_t>& eta, int first, int n, int m) {
    std::vector<Int> raw(static_cast<size_t>(n));
    for (size_t i = 0; i < eta.size(); ++i) {
        int j = first + static_cast<int>(i);
        raw[static_cast<size_t>(n - j)] += eta[i];
    }
    return FieldElement::reduce(std::move(raw), m);
}

}  // namespace

std::optional<CancellationWitness> search_witness(int m, int n_max) {
    if (m < 2) throw std::invalid_argument("search_witness: m must be >= 2");
    if (n_max < 1 || n_max > 20)
        throw std::invalid_argument("search_witness: n_max out of range");

    for (int n = 1; n <= n_max; ++n) {
        const int h = n / 2;            // left half: positions 1..h
        const int rlen = n - h;          // right half: positions h+1..n
        // Right halves keyed by canonical value; eta_n != 0 so shorter
        // witnesses are not rediscovered padded with zeros.
        std::map<std::vector<Int>, std::vector<unsigned long>> right;
        for (unsigned long code = 0; code < pow3(rlen); ++code) {
            auto w = decode(code, rlen);
            if (w.back() == 0) continue;
            right[partial_value(w, h + 1, n, m).coeffs()].push_back(code);
        }
        std::optional<std::pair<unsigned long, unsigned long>> best;
        for (unsigned long code = 0; code < pow3(h); ++code) {
            auto w = decode(code, h);
            auto it = right.find((-partial_value(w, 1, n, m)).coeffs());
            if (it == right.end()) continue;
            int lpar = 0;
            for (int8_t e : w) lpar += e != 0;
            int lfirst = 0;
            for (int8_t e : w)
                if (e != 0) {
                    lfirst = e;
                    break;
                }
            for (unsigned long rcode : it->second) {
                auto rw = decode(rcode, rlen);
                int par = lpar;
                for (int8_t e : rw) par += e != 0;
                if (par % 2 == 0) continue;
                // Witnesses come in +- pairs; keep the representative whose
                // first nonzero entry is +1.
                int first = lfirst;
                if (first == 0)
                    for (int8_t e : rw)
                        if (e != 0) {
                            first = e;
                            break;
                        }
                if (first < 0) continue;
                if (!best || std::pair(code, rcode) < *best)
                    best = std::pair(code, rcode);
            }
        }
        if (best) {
            CancellationWitness cw;
            cw.n = n;
            cw.eta = decode(best->first, h);
            auto rw = decode(best->second, rlen);
            cw.eta.insert(cw.eta.end(), rw.begin(), rw.end());
            return cw;
        }
    }
    return std::nullopt;
}

OddmReport verify_no_decay(int m, int n_max) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("verify_no_decay: m must be odd >= 3");
    FieldSpec spec(m);
    SignedMeasure nu = SignedMeasure::dirac_zero(spec);
    SignedMeasure mu = nu;
    OddmReport rep;
    for (int n = 1; n <= n_max; ++n) {
        nu = nu.signed_step(spec);
        mu = mu.unsigned_step(spec);
        if (nu.total_variation() != 1) {
            std::ostringstream os;
            os << "m=" << m << " n=" << n << ": ||nu|| = "
               << nu.total_variation().get_str() << " != 1";
            return {false, n, os.str()};
        }
        if (!(nu.variation_measure() == mu)) {
            std::ostringstream os;
            os << "m=" << m << " n=" << n << ": |nu| != mu atom-for-atom";
            return {false, n, os.str()};
        }
        rep.max_n_checked = n;
    }
    return rep;
}

ParityReport verify_parity_argument(int m, int n_max) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("verify_parity_argument: m must be odd >= 3");
    if (n_max > 20)
        throw std::invalid_argument("verify_parity_argument: n_max too large");
    FieldSpec spec(m);
    ParityReport rep;
    for (int n = 1; n <= n_max; ++n) {
        // Group all 2^n sequences by exact position.
        std::map<std::vector<Int>, std::vector<unsigned long>> groups;
        for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
            std::vector<Int> c(static_cast<size_t>(n));
            for (int j = 1; j <= n; ++j)
                c[static_cast<size_t>(n - j)] += ((bits >> (j - 1)) & 1) ? 1 : -1;
            groups[FieldElement::reduce(std::move(c), m).coeffs()].push_back(bits);
        }
        for (const auto& [pos, words] : groups) {
            for (size_t i = 0; i < words.size(); ++i) {
                for (size_t j = i + 1; j < words.size(); ++j) {
                    ++rep.coincidences;
                    // eta support = differing coordinates.
                    int support = __builtin_popcountl(words[i] ^ words[j]);
                    if (support % 2 != 0) {
                        std::ostringstream os;
                        os << "m=" << m << " n=" << n
                           << ": coinciding pair with odd eta support";
                        return {false, rep.coincidences, n, os.str()};
                    }
                }
            }
        }
        rep.max_n_checked = n;
    }
    return rep;
}

}  // namespace bconv
