#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "pentagram/errors.hpp"
#include "pentagram/laurent.hpp"
#include "pentagram/rational.hpp"

namespace pentagram {

// ---------------------------------------------------------------------------
// Exchange matrices and quivers
// ---------------------------------------------------------------------------

/// Small dense integer matrix (row-major), used for exchange matrices.
struct IntMat {
    int n = 0;
    std::vector<int> a;

    IntMat() = default;
    explicit IntMat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

    int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    int at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    IntMat operator-() const {
        IntMat r = *this;
        for (auto& v : r.a) v = -v;
        return r;
    }

    bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
};

inline bool is_skew_symmetric(const IntMat& b) {
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j)
            if (b.at(i, j) != -b.at(j, i)) return false;
    return true;
}

/// The exchange matrix B0 of rank 2n: entries (-1)^j on the +-1 diagonals
/// mod 2n, (-1)^{j+1} on the +-3 diagonals, zero elsewhere. Indices below
/// are 1-based as in the defining formula.
inline IntMat b0_matrix(int n) {
    if (n < 4) throw input_error("B0 needs n >= 4 so the classes +-1, +-3 stay distinct");
    int rank = 2 * n;
    IntMat b(rank);
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            int d = ((i - j) % rank + rank) % rank;
            int v = 0;
            if (d == 1 || d == rank - 1)
                v = (j % 2 == 0) ? 1 : -1;
            else if (d == 3 || d == rank - 3)
                v = (j % 2 == 0) ? -1 : 1;
            b.at(i - 1, j - 1) = v;
        }
    return b;
}

/// Matrix mutation in direction k (1-based).
inline IntMat mutate_matrix(const IntMat& b, int k) {
    if (k < 1 || k > b.n) throw input_error("mutation direction out of range");
    int kk = k - 1;
    IntMat r(b.n);
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            if (i == kk || j == kk) {
                r.at(i, j) = -b.at(i, j);
            } else {
                int bik = b.at(i, kk), bkj = b.at(kk, j);
                int prod = bik * bkj;
                int sgn = bik > 0 ? 1 : (bik < 0 ? -1 : 0);
                r.at(i, j) = b.at(i, j) + sgn * std::max(prod, 0);
            }
        }
    return r;
}

/// Quiver on vertices 1..n: arcs[i][j] counts arcs i -> j. Derived from a
/// skew-symmetric matrix by b_{ij} > 0 giving b_{ij} arcs i -> j; no loops,
/// no 2-cycles.
struct Quiver {
    int n = 0;
    std::vector<int> arcs;

    explicit Quiver(int size = 0) : n(size), arcs(static_cast<std::size_t>(size) * size, 0) {}

    int& arc(int i, int j) { return arcs[static_cast<std::size_t>(i) * n + j]; }
    int arc(int i, int j) const { return arcs[static_cast<std::size_t>(i) * n + j]; }

    bool operator==(const Quiver& o) const { return n == o.n && arcs == o.arcs; }
};

inline Quiver quiver_from_matrix(const IntMat& b) {
    Quiver q(b.n);
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) q.arc(i, j) = std::max(b.at(i, j), 0);
    return q;
}

inline IntMat matrix_from_quiver(const Quiver& q) {
    IntMat b(q.n);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) b.at(i, j) = q.arc(i, j) - q.arc(j, i);
    return b;
}

/// Quiver mutation at vertex k (1-based): complete length-2 paths through k,
/// reverse arcs at k, cancel 2-cycles.
inline Quiver quiver_mutate(const Quiver& q, int k) {
    if (k < 1 || k > q.n) throw input_error("mutation direction out of range");
    int kk = k - 1;
    Quiver r = q;
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            if (i != kk && j != kk) r.arc(i, j) += q.arc(i, kk) * q.arc(kk, j);
    for (int i = 0; i < q.n; ++i) {
        if (i == kk) continue;
        std::swap(r.arc(i, kk), r.arc(kk, i));
    }
    for (int i = 0; i < q.n; ++i)
        for (int j = i + 1; j < q.n; ++j) {
            int c = std::min(r.arc(i, j), r.arc(j, i));
            r.arc(i, j) -= c;
            r.arc(j, i) -= c;
        }
    return r;
}

// ---------------------------------------------------------------------------
// Rational functions as (numerator, denominator) LPoly pairs
// ---------------------------------------------------------------------------

/// Rational function stored as an LPoly pair. Normalization strips shared
/// monomial and integer content only; equality is cross-multiplication.
/// (Full multivariate gcd is deliberately avoided.)
struct RationalFn {
    LPoly num;
    LPoly den;

    explicit RationalFn(int width) : num(LPoly::one(width)), den(LPoly::one(width)) {}
    RationalFn(LPoly n, LPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw algebra_error("rational function with zero denominator");
        normalize();
    }

    static RationalFn from_poly(LPoly p) {
        int w = p.width();
        return RationalFn(std::move(p), LPoly::one(w));
    }

    static RationalFn variable(int width, long long j) {
        return from_poly(LPoly::var(width, j));
    }

    int width() const { return num.width(); }

    void normalize() {
        if (num.is_zero()) {
            den = LPoly::one(den.width());
            return;
        }
        LMonomial shared = trop_add(num.content_monomial(), den.content_monomial());
        if (!shared.is_one()) {
            LMonomial inv = shared.inverse();
            num = num * inv;
            den = den * inv;
        }
        long long g = 0;
        for (const auto& t : num.terms()) g = std::gcd(g, t.second < 0 ? -t.second : t.second);
        for (const auto& t : den.terms()) g = std::gcd(g, t.second < 0 ? -t.second : t.second);
        long long sign = den.leading_coefficient() < 0 ? -1 : 1;
        if (g > 1 || sign < 0) {
            // divide both through by g * sign
            auto scale = [&](const LPoly& p) {
                std::vector<std::pair<LMonomial, long long>> ts;
                ts.reserve(p.term_count());
                for (const auto& t : p.terms()) ts.emplace_back(t.first, t.second / (g * sign));
                return LPoly::from_terms(p.width(), std::move(ts));
            };
            num = scale(num);
            den = scale(den);
        }
    }
};

inline RationalFn reciprocal(const RationalFn& x) {
    if (x.num.is_zero()) throw algebra_error("reciprocal of zero");
    return RationalFn(x.den, x.num);
}

inline RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num * b.num, a.den * b.den);
}

inline RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline RationalFn one_plus(const RationalFn& x) {
    return RationalFn(x.den + x.num, x.den);
}

inline bool rf_equal(const RationalFn& a, const RationalFn& b) {
    return a.num * b.den == b.num * a.den;
}

// Scalar counterparts so seed mutation can run over Q as well.
inline Rat reciprocal(const Rat& x) { return x.inverse(); }
inline Rat one_plus(const Rat& x) { return Rat(1) + x; }

// ---------------------------------------------------------------------------
// Y-seeds and mutations
// ---------------------------------------------------------------------------

/// Y-seed: a tuple of coefficients and a skew-symmetric exchange matrix.
/// S is Rat for numeric seeds or RationalFn for symbolic ones.
template <class S>
struct SeedT {
    std::vector<S> y;
    IntMat B;

    int rank() const { return static_cast<int>(y.size()); }
};

using YSeed = SeedT<RationalFn>;
using NumSeed = SeedT<Rat>;

/// The symbolic seed (y_1, .., y_rank; B).
inline YSeed initial_seed(const IntMat& b) {
    YSeed s;
    s.B = b;
    for (int j = 1; j <= b.n; ++j) s.y.push_back(RationalFn::variable(b.n, j));
    return s;
}

/// y_k^{[b]_+} (1+y_k)^{-b}, the factor mutation in direction k applies to
/// y_j when b = b_{kj}. Callers skip b = 0 (the factor is 1).
template <class S>
S exchange_factor(const S& yk, int b) {
    if (b > 0) {
        S f = yk * reciprocal(one_plus(yk)); // y_k / (1+y_k)
        S acc = f;
        for (int t = 1; t < b; ++t) acc = acc * f;
        return acc;
    }
    S f = one_plus(yk);
    S acc = f;
    for (int t = 1; t < -b; ++t) acc = acc * f;
    return acc;
}

/// Seed mutation mu_k (k 1-based): y_k inverts, every other y_j picks up the
/// exchange factor for b_{kj}, and B mutates.
template <class S>
SeedT<S> mutate(const SeedT<S>& s, int k) {
    if (k < 1 || k > s.rank()) throw input_error("mutation direction out of range");
    if (!is_skew_symmetric(s.B)) throw input_error("exchange matrix must be skew-symmetric");
    SeedT<S> r;
    r.B = mutate_matrix(s.B, k);
    r.y.reserve(s.y.size());
    const S& yk = s.y[static_cast<std::size_t>(k - 1)];
    for (int j = 1; j <= s.rank(); ++j) {
        if (j == k) {
            r.y.push_back(reciprocal(yk));
        } else {
            int b = s.B.at(k - 1, j - 1);
            if (b == 0)
                r.y.push_back(s.y[static_cast<std::size_t>(j - 1)]);
            else
                r.y.push_back(s.y[static_cast<std::size_t>(j - 1)] * exchange_factor(yk, b));
        }
    }
    return r;
}

/// Hypotheses of the compound-mutation lemma: the quiver is bipartite (no
/// arcs within a parity class) and length-2 path counts are symmetric.
inline bool bipartite_balanced(const IntMat& b) {
    if (!is_skew_symmetric(b)) return false;
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j)
            if ((i - j) % 2 == 0 && b.at(i, j) != 0) return false;
    Quiver q = quiver_from_matrix(b);
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            int fwd = 0, bwd = 0;
            for (int k = 0; k < b.n; ++k) {
                fwd += q.arc(i, k) * q.arc(k, j);
                bwd += q.arc(j, k) * q.arc(k, i);
            }
            if (fwd != bwd) return false;
        }
    return true;
}

namespace detail {

template <class S>
SeedT<S> compound_mutation(const SeedT<S>& s, int parity_1based) {
    if (!bipartite_balanced(s.B))
        throw input_error("compound mutation hypotheses violated: quiver must be "
                          "bipartite with balanced length-2 path counts");
    SeedT<S> r = s;
    for (int k = parity_1based; k <= s.rank(); k += 2) r = mutate(r, k);
    return r;
}

} // namespace detail

/// Simultaneous mutation at all even (resp. odd) vertices. The individual
/// mutations commute under the checked hypotheses, so any order gives the
/// same seed; the output matrix is -B.
template <class S>
SeedT<S> mu_even(const SeedT<S>& s) {
    return detail::compound_mutation(s, 2);
}

template <class S>
SeedT<S> mu_odd(const SeedT<S>& s) {
    return detail::compound_mutation(s, 1);
}

// ---------------------------------------------------------------------------
// The transition maps alpha_1 / alpha_2
// ---------------------------------------------------------------------------

/// alpha_1: the y-transition of T on a polygon indexed by 1/2 + Z.
/// y'_j = y_{j-3} y_j y_{j+3} (1+y_{j-1})(1+y_{j+1}) / ((1+y_{j-3})(1+y_{j+3}))
/// for j even, y_j^{-1} for j odd. alpha_2 swaps the parity roles.
template <class S>
std::vector<S> alpha_map(const std::vector<S>& y, int which) {
    int m = static_cast<int>(y.size());
    auto at = [&](long long j) -> const S& {
        return y[static_cast<std::size_t>(reduce_var(j - 1, m))];
    };
    std::vector<S> out;
    out.reserve(y.size());
    for (long long j = 1; j <= m; ++j) {
        bool big_formula = (which == 1) ? (j % 2 == 0) : (j % 2 == 1);
        if (!big_formula) {
            out.push_back(reciprocal(at(j)));
        } else {
            S v = at(j - 3) * at(j) * at(j + 3);
            v = v * one_plus(at(j - 1)) * one_plus(at(j + 1));
            v = v * reciprocal(one_plus(at(j - 3))) * reciprocal(one_plus(at(j + 3)));
            out.push_back(v);
        }
    }
    return out;
}

template <class S>
std::vector<S> alpha1(const std::vector<S>& y) {
    return alpha_map(y, 1);
}

template <class S>
std::vector<S> alpha2(const std::vector<S>& y) {
    return alpha_map(y, 2);
}

// ---------------------------------------------------------------------------
// The M / F / Y tables
// ---------------------------------------------------------------------------

/// Symbolic tables of the Y-pattern attached to B0 in the cyclic ring of
/// width 2n. M is the tropical monomial part, F the polynomial part, and
/// Y(j,k) the full coefficient of the k-th iterate:
///
///   M(j,k) = prod_{i=-k}^{k} y_{j+3i}
///   F(j,-1) = F(j,0) = 1
///   F(j,k+1) = (F(j-3,k) F(j+3,k) + M(j,k) F(j-1,k) F(j+1,k)) / F(j,k-1)
///   Y(j,k)  = M(j,k) F(j-1,k) F(j+1,k) / (F(j-3,k) F(j+3,k))   (j+k even)
///   Y(j,k)  = 1 / Y(j,k-1)                                     (j+k odd)
///
/// Every division above is exact; the memo table is filled layer by layer.
class YPattern {
public:
    explicit YPattern(int n) : n_(n), w_(2 * n) {
        if (n < 4) throw input_error("Y-pattern tables need n >= 4");
    }

    int n() const { return n_; }
    int width() const { return w_; }

    LMonomial M(long long j, int k) const {
        if (k < -1) throw input_error("M(j,k) needs k >= -1");
        return range_product(w_, j, -k, k);
    }

    const LPoly& F(long long j, int k) {
        if (k < -1) throw input_error("F(j,k) needs k >= -1");
        auto key = std::make_pair(reduce_var(j, w_), k);
        auto it = fmemo_.find(key);
        if (it != fmemo_.end()) return it->second;
        LPoly value = LPoly::one(w_);
        if (k >= 1) {
            LPoly numerator = F(j - 3, k - 1) * F(j + 3, k - 1) +
                              (F(j - 1, k - 1) * F(j + 1, k - 1)) * M(j, k - 1);
            value = poly_div_exact(numerator, F(j, k - 2));
        }
        return fmemo_.emplace(key, std::move(value)).first->second;
    }

    RationalFn Y(long long j, int k) {
        if (k < -1) throw input_error("Y(j,k) needs k >= -1");
        long long parity = ((j + k) % 2 + 2) % 2;
        if (parity != 0) {
            RationalFn below = Y(j, k - 1);
            return reciprocal(below);
        }
        LPoly num = (F(j - 1, k) * F(j + 1, k)) * M(j, k);
        LPoly den = F(j - 3, k) * F(j + 3, k);
        return RationalFn(std::move(num), std::move(den));
    }

    /// Tropical evaluation of the subtraction-free expression tree of
    /// Y(j,k), with + replaced by the exponent-wise minimum.
    LMonomial tropical_Y(long long j, int k) {
        if (((j + k) % 2 + 2) % 2 != 0)
            throw input_error("tropical evaluation is defined on the j+k even class");
        auto key = std::make_pair(reduce_var(j, w_), k);
        auto it = tropmemo_.find(key);
        if (it != tropmemo_.end()) return it->second;
        LMonomial value(w_);
        if (k == -1) {
            value = LMonomial::var(w_, j, -1);
        } else if (k == 0) {
            value = LMonomial::var(w_, j, 1);
        } else {
            LMonomial one(w_);
            auto one_plus_trop = [&](const LMonomial& m) { return trop_add(one, m); };
            LMonomial a = tropical_Y(j - 3, k - 1);
            LMonomial b = tropical_Y(j + 3, k - 1);
            LMonomial c = tropical_Y(j, k - 2);
            LMonomial d = tropical_Y(j - 1, k - 1);
            LMonomial e = tropical_Y(j + 1, k - 1);
            value = mono_div(mono_mul(a, b), c);
            value = mono_mul(value, mono_mul(one_plus_trop(d), one_plus_trop(e)));
            value = mono_div(value, mono_mul(one_plus_trop(a), one_plus_trop(b)));
        }
        return tropmemo_.emplace(key, std::move(value)).first->second;
    }

    /// The tropical evaluation must recover exactly the monomial part M.
    bool tropical_matches(long long j, int k) { return tropical_Y(j, k) == M(j, k); }

private:
    int n_;
    int w_;
    std::map<std::pair<int, int>, LPoly> fmemo_;
    std::map<std::pair<int, int>, LMonomial> tropmemo_;
};

// ---------------------------------------------------------------------------
// Numeric evaluation of the iterate formulas
// ---------------------------------------------------------------------------

/// Exact evaluation of the closed-form iterate formulas at a concrete
/// y-assignment (one polygon's y-parameters). F-values are produced by the
/// same recurrence as the symbolic table, over Q instead of the polynomial
/// ring, with vanishing denominators reported rather than divided by.
class NumericDynamics {
public:
    /// y lists use the 1..2n indexing of y_params().
    explicit NumericDynamics(std::vector<Rat> y_1_to_2n)
        : w_(static_cast<int>(y_1_to_2n.size())), y_(std::move(y_1_to_2n)) {
        if (w_ < 8 || w_ % 2 != 0) throw input_error("need 2n >= 8 y-values");
    }

    Rat y_at(long long j) const {
        int r = reduce_var(j, w_);
        return y_[static_cast<std::size_t>(r == 0 ? w_ - 1 : r - 1)];
    }

    /// prod_{i=a}^{b} y_{j+3i} with the extended range conventions.
    Rat y_range_product(long long j, long long a, long long b) const {
        Rat acc(1);
        if (b >= a) {
            for (long long i = a; i <= b; ++i) acc *= y_at(j + 3 * i);
        } else if (b < a - 1) {
            for (long long i = b + 1; i <= a - 1; ++i) {
                Rat v = y_at(j + 3 * i);
                if (v.is_zero()) throw algebra_error("zero y-value in a reciprocal product");
                acc /= v;
            }
        }
        return acc;
    }

    Rat M_val(long long j, int k) const { return y_range_product(j, -k, k); }

    const Rat& F_val(long long j, int k) {
        if (k < -1) throw input_error("F(j,k) needs k >= -1");
        auto key = std::make_pair(reduce_var(j, w_), k);
        auto it = fmemo_.find(key);
        if (it != fmemo_.end()) return it->second;
        Rat value(1);
        if (k >= 1) {
            Rat divisor = F_val(j, k - 2);
            if (divisor.is_zero())
                throw algebra_error("denominator vanishes: F(" + std::to_string(j) + "," +
                                    std::to_string(k - 2) + ") = 0 at this assignment");
            value = (F_val(j - 3, k - 1) * F_val(j + 3, k - 1) +
                     M_val(j, k - 1) * F_val(j - 1, k - 1) * F_val(j + 1, k - 1)) /
                    divisor;
        }
        return fmemo_.emplace(key, std::move(value)).first->second;
    }

    /// y_j(T^k(A)) by the closed-form iterate formula.
    Rat iterate_y(long long j, int k) {
        if (k < 1) throw input_error("iterate formula needs k >= 1");
        bool even_case = ((j + k) % 2 + 2) % 2 == 0;
        if (even_case) {
            Rat den = F_val(j - 3, k) * F_val(j + 3, k);
            if (den.is_zero()) throw algebra_error("denominator vanishes in the iterate formula");
            return M_val(j, k) * F_val(j - 1, k) * F_val(j + 1, k) / den;
        }
        Rat prefix = y_range_product(j, -k + 1, k - 1);
        if (prefix.is_zero()) throw algebra_error("zero y-product cannot be inverted");
        Rat den = F_val(j - 1, k - 1) * F_val(j + 1, k - 1);
        if (den.is_zero()) throw algebra_error("denominator vanishes in the iterate formula");
        return prefix.inverse() * F_val(j - 3, k - 1) * F_val(j + 3, k - 1) / den;
    }

    /// x_j(T^k(A)) by the closed-form iterate formula; needs the seed
    /// polygon's x-coordinates alongside the y-assignment.
    Rat iterate_x(const std::vector<Rat>& x_1_to_2n, long long j, int k) {
        if (static_cast<int>(x_1_to_2n.size()) != w_)
            throw input_error("x-list width mismatch");
        if (k < 1) throw input_error("iterate formula needs k >= 1");
        auto x_at = [&](long long t) -> const Rat& {
            int r = reduce_var(t, w_);
            return x_1_to_2n[static_cast<std::size_t>(r == 0 ? w_ - 1 : r - 1)];
        };
        Rat prefix = y_range_product(j + 1, -k, k - 1);
        bool even_case = ((j + k) % 2 + 2) % 2 == 0;
        if (even_case) {
            Rat den = F_val(j - 2, k - 1) * F_val(j + 1, k);
            if (den.is_zero()) throw algebra_error("denominator vanishes in the iterate formula");
            return x_at(j - 3 * k) * prefix * F_val(j + 2, k - 1) * F_val(j - 3, k) / den;
        }
        Rat den = F_val(j + 1, k - 1) * F_val(j - 2, k);
        if (den.is_zero()) throw algebra_error("denominator vanishes in the iterate formula");
        return x_at(j + 3 * k) * prefix * F_val(j - 3, k - 1) * F_val(j + 2, k) / den;
    }

private:
    int w_;
    std::vector<Rat> y_;
    std::map<std::pair<int, int>, Rat> fmemo_;
};

} // namespace pentagram
