#include "bconv/field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace bconv {

FieldElement FieldElement::constant(int m, Int c) {
    std::vector<Int> v(m);
    v[0] = std::move(c);
    return FieldElement(std::move(v));
}

FieldElement FieldElement::reduce(std::vector<Int> raw, int m) {
    if (m < 2) throw std::invalid_argument("reduce: m must be >= 2");
    // beta^d = beta^{d-1} + ... + beta^{d-m}, applied top-down.
    for (int d = static_cast<int>(raw.size()) - 1; d >= m; --d) {
        if (sgn(raw[d]) == 0) continue;
        Int v = std::move(raw[d]);
        raw[d] = 0;
        for (int k = 1; k <= m; ++k) raw[d - k] += v;
    }
    raw.resize(m);
    return FieldElement(std::move(raw));
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return sgn(c) == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    if (coeffs_.size() != rhs.coeffs_.size())
        throw std::invalid_argument("FieldElement: degree mismatch");
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] + rhs.coeffs_[i];
    return FieldElement(std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    if (coeffs_.size() != rhs.coeffs_.size())
        throw std::invalid_argument("FieldElement: degree mismatch");
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeffs_[i] - rhs.coeffs_[i];
    return FieldElement(std::move(out));
}

FieldElement FieldElement::operator-() const {
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
    return FieldElement(std::move(out));
}

FieldElement FieldElement::mul_by_beta() const {
    const int m = degree_bound();
    std::vector<Int> raw(m + 1);
    for (int i = 0; i < m; ++i) raw[i + 1] = coeffs_[i];
    return reduce(std::move(raw), m);
}

FieldElement FieldElement::mul(const FieldElement& rhs) const {
    const int m = degree_bound();
    if (rhs.degree_bound() != m)
        throw std::invalid_argument("FieldElement: degree mismatch");
    std::vector<Int> raw(2 * m - 1);
    for (int i = 0; i < m; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (int j = 0; j < m; ++j) raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return reduce(std::move(raw), m);
}

std::string FieldElement::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += coeffs_[i].get_str();
    }
    return s + ")";
}

double eval_double(const FieldElement& a, double beta) {
    double acc = 0.0;
    const auto& c = a.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = acc * beta + c[i].get_d();
    return acc;
}

namespace {

// m(x) coefficients, constant first.
std::vector<Int> multinacci_coeffs(int m) {
    std::vector<Int> c(m + 1, Int(-1));
    c[m] = 1;
    return c;
}

Rat eval_rat(const std::vector<Int>& coeffs, const Rat& x) {
    Rat acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Rat(coeffs[i]);
    return acc;
}

struct Interval {
    Rat lo, hi;
};

Interval imul(const Interval& a, const Interval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

// Exact trial division of monic integer polynomials (constant first).
// Returns true if div divides num over Z.
bool divides_exactly(const std::vector<Int>& num, const std::vector<Int>& div) {
    std::vector<Int> r = num;
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(div.size()) - 1;
    for (int d = dn; d >= dd; --d) {
        Int q = r[d];
        if (sgn(q) == 0) continue;
        for (int k = 0; k <= dd; ++k) r[d - dd + k] -= q * div[k];
    }
    return std::all_of(r.begin(), r.end(), [](const Int& c) { return sgn(c) == 0; });
}

}  // namespace

namespace {

bool multinacci_poly_irreducible_uncached(int m) {
    const auto f = multinacci_coeffs(m);
    // Any monic integer factor of degree d has all roots among the roots of
    // m(x), which all satisfy |z| < 2; its k-th coefficient is an elementary
    // symmetric function, so |coeff_{d-k}| <= C(d,k) * 2^k. It suffices to
    // search degrees d <= m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        std::vector<long> bound(d);  // bound[i] for coefficient of x^i
        for (int k = 1; k <= d; ++k) {
            long binom = 1;
            for (int j = 0; j < k; ++j) binom = binom * (d - j) / (j + 1);
            long b = binom;
            for (int j = 0; j < k; ++j) b *= 2;
            bound[d - k] = b;
        }
        std::vector<Int> cand(d + 1);
        cand[d] = 1;
        std::vector<long> cur(d, 0);
        for (int i = 0; i < d; ++i) cur[i] = -bound[i];
        while (true) {
            // constant term must be +-1 (m(0) = -1)
            if (cur[0] == 1 || cur[0] == -1) {
                for (int i = 0; i < d; ++i) cand[i] = cur[i];
                if (divides_exactly(f, cand)) return false;
            }
            int i = 0;
            while (i < d && cur[i] == bound[i]) {
                cur[i] = -bound[i];
                ++i;
            }
            if (i == d) break;
            ++cur[i];
        }
    }
    return true;
}

}  // namespace

bool multinacci_poly_irreducible(int m) {
    static std::mutex mu;
    static std::map<int, bool> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, multinacci_poly_irreducible_uncached(m)).first;
    return it->second;
}

FieldSpec::FieldSpec(int m) : m_(m), enc_(std::make_shared<Enclosure>()) {
    if (m < 2) throw std::invalid_argument("FieldSpec: m must be >= 2");
    if (m > 8) throw std::invalid_argument("FieldSpec: m > 8 unsupported (no irreducibility certificate)");
    if (!multinacci_poly_irreducible(m))
        throw std::logic_error("FieldSpec: minimal polynomial failed irreducibility check");
    enc_->lo = Rat(1);
    enc_->hi = Rat(2);
}

std::vector<Int> FieldSpec::min_poly() const { return multinacci_coeffs(m_); }

RatInterval FieldSpec::beta_enclosure() const {
    std::lock_guard<std::mutex> lk(enc_->mu);
    return {enc_->lo, enc_->hi};
}

void FieldSpec::refine_to(const Rat& width) const {
    const auto mp = multinacci_coeffs(m_);
    std::lock_guard<std::mutex> lk(enc_->mu);
    while (enc_->hi - enc_->lo > width) {
        Rat mid = (enc_->lo + enc_->hi) / 2;
        if (sgn(eval_rat(mp, mid)) < 0)
            enc_->lo = mid;
        else
            enc_->hi = mid;
    }
}

FieldSpec FieldSpec::refined(const Rat& width) const {
    if (sgn(width) <= 0) throw std::invalid_argument("refined: width must be positive");
    refine_to(width);
    return *this;
}

int FieldSpec::interval_sign(const std::vector<Int>& coeffs, const Rat& lo, const Rat& hi) {
    Interval x{lo, hi};
    Interval acc{Rat(0), Rat(0)};
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = imul(acc, x);
        acc.lo += Rat(coeffs[i]);
        acc.hi += Rat(coeffs[i]);
    }
    if (sgn(acc.lo) > 0) return 1;
    if (sgn(acc.hi) < 0) return -1;
    return 0;  // undecided
}

int FieldSpec::sign(const FieldElement& a) const {
    if (a.degree_bound() != m_)
        throw std::invalid_argument("sign: element degree does not match spec");
    if (a.is_zero()) return 0;
    for (;;) {
        auto [lo, hi] = beta_enclosure();
        int s = interval_sign(a.coeffs(), lo, hi);
        if (s != 0) return s;
        refine_to((hi - lo) / 2);
    }
}

int FieldSpec::compare(const FieldElement& a, const FieldElement& b) const {
    return sign(a - b);
}

double FieldSpec::beta_double() const {
    refine_to(Rat(1, Int("100000000000000000")));  // 1e-17
    auto [lo, hi] = beta_enclosure();
    return Rat((lo + hi) / 2).get_d();
}

}  // namespace bconv
