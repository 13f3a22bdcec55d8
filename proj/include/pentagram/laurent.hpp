#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "pentagram/errors.hpp"
#include "pentagram/rational.hpp"

namespace pentagram {

/// Reduce a variable subscript to its residue in [0, width). The variables
/// y_1 .. y_{2n} are cyclic with y_{j+2n} = y_j; residue 0 stands for y_{2n}.
inline int reduce_var(long long j, int width) {
    long long r = j % width;
    if (r < 0) r += width;
    return static_cast<int>(r);
}

/// Laurent monomial in the cyclic variables of a fixed-width ring. Exponents
/// may be negative; the all-zero vector is the monomial 1.
class LMonomial {
public:
    explicit LMonomial(int width) : e_(static_cast<std::size_t>(width), 0) {
        if (width < 2) throw input_error("variable ring needs width >= 2");
    }

    static LMonomial var(int width, long long j, int exp = 1) {
        LMonomial m(width);
        m.e_[static_cast<std::size_t>(reduce_var(j, width))] = static_cast<std::int16_t>(exp);
        return m;
    }

    int width() const { return static_cast<int>(e_.size()); }
    int exp_at(int residue) const { return e_[static_cast<std::size_t>(residue)]; }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](std::int16_t v) { return v == 0; });
    }
    long long total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), 0LL);
    }

    LMonomial& mul_var(long long j, int exp) {
        e_[static_cast<std::size_t>(reduce_var(j, width()))] =
            static_cast<std::int16_t>(e_[static_cast<std::size_t>(reduce_var(j, width()))] + exp);
        return *this;
    }

    friend LMonomial mono_mul(const LMonomial& a, const LMonomial& b) {
        LMonomial r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            r.e_[i] = static_cast<std::int16_t>(r.e_[i] + b.e_[i]);
        return r;
    }

    friend LMonomial mono_div(const LMonomial& a, const LMonomial& b) {
        LMonomial r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i)
            r.e_[i] = static_cast<std::int16_t>(r.e_[i] - b.e_[i]);
        return r;
    }

    LMonomial inverse() const {
        LMonomial r = *this;
        for (auto& v : r.e_) v = static_cast<std::int16_t>(-v);
        return r;
    }

    LMonomial pow(int k) const {
        LMonomial r = *this;
        for (auto& v : r.e_) v = static_cast<std::int16_t>(v * k);
        return r;
    }

    /// Tropical addition: exponent-wise minimum.
    friend LMonomial trop_add(const LMonomial& a, const LMonomial& b) {
        LMonomial r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(r.e_[i], b.e_[i]);
        return r;
    }

    /// Rename variables: y_r -> y_{r+delta}.
    LMonomial shifted(long long delta) const {
        LMonomial r(width());
        for (int i = 0; i < width(); ++i)
            r.e_[static_cast<std::size_t>(reduce_var(i + delta, width()))] =
                e_[static_cast<std::size_t>(i)];
        return r;
    }

    Rat evaluate(const std::function<Rat(int)>& value_of_residue) const {
        Rat acc(1);
        for (int i = 0; i < width(); ++i) {
            int e = e_[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            Rat v = value_of_residue(i);
            if (v.is_zero() && e < 0) throw algebra_error("zero raised to a negative power");
            acc *= v.pow(e);
        }
        return acc;
    }

    // Graded lexicographic order: by total degree, then by exponent vector.
    friend bool operator<(const LMonomial& a, const LMonomial& b) {
        long long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e_ < b.e_;
    }
    friend bool operator>(const LMonomial& a, const LMonomial& b) { return b < a; }
    friend bool operator==(const LMonomial& a, const LMonomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const LMonomial& a, const LMonomial& b) { return a.e_ != b.e_; }

    std::string str() const {
        std::string out;
        for (int i = 0; i < width(); ++i) {
            int e = e_[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += "y" + std::to_string(i);
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<std::int16_t> e_;
};

/// Product of the variables y_{j+3i} for i = a..b, with the extended
/// conventions: empty when b = a-1, and the reciprocal of the skipped range
/// when b < a-1, so that consecutive ranges always splice.
inline LMonomial range_product(int width, long long j, long long a, long long b) {
    LMonomial m(width);
    if (b >= a) {
        for (long long i = a; i <= b; ++i) m.mul_var(j + 3 * i, 1);
    } else if (b < a - 1) {
        for (long long i = b + 1; i <= a - 1; ++i) m.mul_var(j + 3 * i, -1);
    }
    return m;
}

/// Integer-coefficient Laurent polynomial: a canonical (sorted, zero-free)
/// term list over LMonomial with graded-lex ordering.
class LPoly {
public:
    explicit LPoly(int width) : w_(width) {
        if (width < 2) throw input_error("variable ring needs width >= 2");
    }

    static LPoly zero(int width) { return LPoly(width); }

    static LPoly constant(int width, long long c) {
        LPoly p(width);
        if (c != 0) p.terms_.emplace_back(LMonomial(width), c);
        return p;
    }

    static LPoly one(int width) { return constant(width, 1); }

    static LPoly from_mono(const LMonomial& m, long long c = 1) {
        LPoly p(m.width());
        if (c != 0) p.terms_.emplace_back(m, c);
        return p;
    }

    static LPoly var(int width, long long j) { return from_mono(LMonomial::var(width, j)); }

    /// 1 + y_j.
    static LPoly one_plus_var(int width, long long j) {
        return one(width) + var(width, j);
    }

    static LPoly from_terms(int width, std::vector<std::pair<LMonomial, long long>> ts) {
        LPoly p(width);
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    int width() const { return w_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].second == 1 && terms_[0].first.is_one();
    }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<LMonomial, long long>>& terms() const { return terms_; }

    bool all_coefficients_positive() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.second > 0; });
    }

    LPoly operator-() const {
        LPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend LPoly operator+(const LPoly& a, const LPoly& b) {
        a.check_width(b);
        LPoly r(a.w_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            if (a.terms_[i].first == b.terms_[j].first) {
                long long c = a.terms_[i].second + b.terms_[j].second;
                if (c != 0) r.terms_.emplace_back(a.terms_[i].first, c);
                ++i, ++j;
            } else if (a.terms_[i].first < b.terms_[j].first) {
                r.terms_.push_back(a.terms_[i++]);
            } else {
                r.terms_.push_back(b.terms_[j++]);
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }

    friend LPoly operator*(const LPoly& a, const LPoly& b) {
        a.check_width(b);
        LPoly r(a.w_);
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<std::pair<LMonomial, long long>> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                prod.emplace_back(mono_mul(ta.first, tb.first), ta.second * tb.second);
        r.terms_ = std::move(prod);
        r.normalize();
        return r;
    }

    friend LPoly operator*(const LPoly& a, long long c) {
        LPoly r = a;
        if (c == 0) return zero(a.w_);
        for (auto& t : r.terms_) t.second *= c;
        return r;
    }

    friend LPoly operator*(const LPoly& a, const LMonomial& m) {
        LPoly r(a.w_);
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) r.terms_.emplace_back(mono_mul(t.first, m), t.second);
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return r;
    }

    friend bool operator==(const LPoly& a, const LPoly& b) {
        return a.w_ == b.w_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

    /// Exact evaluation; the assignment gives the value of each residue.
    Rat substitute(const std::function<Rat(int)>& value_of_residue) const {
        Rat acc(0);
        for (const auto& t : terms_)
            acc += t.first.evaluate(value_of_residue) * Rat(t.second);
        return acc;
    }

    /// Substitute y_r = -1 for every residue r with r % 2 == parity; the
    /// other variables stay symbolic.
    LPoly specialize_parity(int parity, long long value_sign = -1) const {
        std::vector<std::pair<LMonomial, long long>> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            LMonomial m(w_);
            long long flips = 0;
            for (int i = 0; i < w_; ++i) {
                int e = t.first.exp_at(i);
                if (e == 0) continue;
                if (i % 2 == parity)
                    flips += e;
                else
                    m.mul_var(i, e);
            }
            long long c = t.second;
            if (value_sign < 0 && (flips % 2 != 0)) c = -c;
            out.emplace_back(std::move(m), c);
        }
        return from_terms(w_, std::move(out));
    }

    /// Rename variables: y_r -> y_{r+delta}.
    LPoly shifted(long long delta) const {
        std::vector<std::pair<LMonomial, long long>> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.emplace_back(t.first.shifted(delta), t.second);
        return from_terms(w_, std::move(out));
    }

    const LMonomial& leading_monomial() const {
        if (is_zero()) throw algebra_error("leading term of the zero polynomial");
        return terms_.back().first;
    }
    long long leading_coefficient() const {
        if (is_zero()) throw algebra_error("leading term of the zero polynomial");
        return terms_.back().second;
    }

    /// Exponent-wise minimum over all terms (the monomial content).
    LMonomial content_monomial() const {
        if (is_zero()) throw algebra_error("content of the zero polynomial");
        LMonomial c = terms_[0].first;
        for (std::size_t i = 1; i < terms_.size(); ++i) c = trop_add(c, terms_[i].first);
        return c;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) out += " + ";
            bool unit = t.second == 1 || t.second == -1;
            if (t.first.is_one())
                out += std::to_string(t.second);
            else if (unit)
                out += (t.second == -1 ? "-" : "") + t.first.str();
            else
                out += std::to_string(t.second) + "*" + t.first.str();
        }
        return out;
    }

private:
    void check_width(const LPoly& o) const {
        if (w_ != o.w_) throw input_error("mixed variable-ring widths");
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            std::size_t j = i;
            long long c = 0;
            while (j < terms_.size() && terms_[j].first == terms_[i].first) c += terms_[j++].second;
            if (c != 0) terms_[out++] = {terms_[i].first, c};
            i = j;
        }
        terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(out), terms_.end());
    }

    int w_;
    std::vector<std::pair<LMonomial, long long>> terms_;
};

/// Exact division: returns r with r * q = p, or throws. Inexact division
/// signals a bug in recurrence bookkeeping, since every division performed
/// by the iterate formulas is exact by the cluster-algebra Laurent property.
inline LPoly poly_div_exact(const LPoly& p, const LPoly& q) {
    if (q.is_zero()) throw algebra_error("division by the zero polynomial");
    if (p.is_zero()) return LPoly::zero(p.width());
    const int w = p.width();

    // Clear monomial content so both operands have nonnegative exponents,
    // then run classic single-divisor reduction (well-founded on N^w).
    LMonomial cp = p.content_monomial(), cq = q.content_monomial();
    LPoly pp = p * cp.inverse();
    LPoly qq = q * cq.inverse();

    std::map<LMonomial, long long, std::greater<LMonomial>> rem;
    for (const auto& t : pp.terms()) rem.emplace(t.first, t.second);
    const LMonomial& qlead = qq.leading_monomial();
    const long long qc = qq.leading_coefficient();

    std::vector<std::pair<LMonomial, long long>> quot;
    while (!rem.empty()) {
        auto [m, c] = *rem.begin();
        for (int i = 0; i < w; ++i)
            if (m.exp_at(i) < qlead.exp_at(i))
                throw algebra_error("polynomial division is not exact");
        if (c % qc != 0) throw algebra_error("polynomial division is not exact");
        LMonomial tm = mono_div(m, qlead);
        long long tc = c / qc;
        quot.emplace_back(tm, tc);
        for (const auto& t : qq.terms()) {
            LMonomial key = mono_mul(tm, t.first);
            auto it = rem.find(key);
            long long nc = (it == rem.end() ? 0 : it->second) - tc * t.second;
            if (it == rem.end()) {
                if (nc != 0) rem.emplace(std::move(key), nc);
            } else if (nc == 0) {
                rem.erase(it);
            } else {
                it->second = nc;
            }
        }
    }
    LPoly result = LPoly::from_terms(w, std::move(quot));
    return result * mono_div(cp, cq);
}

/// Parse the canonical text form produced by LPoly::str(): terms joined by
/// " + ", each "c", "mono", or "c*mono" with mono = "y<r>[^<e>]*...".
inline LPoly parse_lpoly(const std::string& text, int width) {
    auto fail = [&](const std::string& why) -> LPoly {
        throw input_error("cannot parse polynomial '" + text + "': " + why);
    };
    std::vector<std::pair<LMonomial, long long>> terms;
    std::size_t pos = 0;
    std::string s = text;
    if (s == "0") return LPoly::zero(width);
    while (pos < s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;
        if (term.empty()) return fail("empty term");

        long long coeff = 1;
        LMonomial mono(width);
        std::size_t tp = 0;
        bool neg = false;
        if (term[tp] == '-') neg = true, ++tp;
        if (tp < term.size() && std::isdigit(static_cast<unsigned char>(term[tp]))) {
            long long v = 0;
            while (tp < term.size() && std::isdigit(static_cast<unsigned char>(term[tp])))
                v = v * 10 + (term[tp++] - '0');
            coeff = v;
            if (tp < term.size() && term[tp] == '*') ++tp;
        }
        if (neg) coeff = -coeff;
        while (tp < term.size()) {
            if (term[tp] != 'y') return fail("expected variable at '" + term.substr(tp) + "'");
            ++tp;
            long long r = 0;
            if (tp >= term.size() || !std::isdigit(static_cast<unsigned char>(term[tp])))
                return fail("expected variable index");
            while (tp < term.size() && std::isdigit(static_cast<unsigned char>(term[tp])))
                r = r * 10 + (term[tp++] - '0');
            int e = 1;
            if (tp < term.size() && term[tp] == '^') {
                ++tp;
                bool eneg = false;
                if (tp < term.size() && term[tp] == '-') eneg = true, ++tp;
                int v = 0;
                if (tp >= term.size() || !std::isdigit(static_cast<unsigned char>(term[tp])))
                    return fail("expected exponent");
                while (tp < term.size() && std::isdigit(static_cast<unsigned char>(term[tp])))
                    v = v * 10 + (term[tp++] - '0');
                e = eneg ? -v : v;
            }
            if (r >= width) return fail("variable index out of range");
            mono.mul_var(r, e);
            if (tp < term.size()) {
                if (term[tp] != '*') return fail("expected '*'");
                ++tp;
            }
        }
        terms.emplace_back(std::move(mono), coeff);
    }
    return LPoly::from_terms(width, std::move(terms));
}

inline std::ostream& operator<<(std::ostream& os, const LMonomial& m) { return os << m.str(); }
inline std::ostream& operator<<(std::ostream& os, const LPoly& p) { return os << p.str(); }

} // namespace pentagram
