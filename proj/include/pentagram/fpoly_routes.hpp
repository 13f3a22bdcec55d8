#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "pentagram/asm_matrix.hpp"
#include "pentagram/errors.hpp"
#include "pentagram/laurent.hpp"
#include "pentagram/poset.hpp"
#include "pentagram/rational.hpp"

namespace pentagram {

// ---------------------------------------------------------------------------
// The monomial array m_{i,j,k}
// ---------------------------------------------------------------------------

namespace detail {

/// Product over i = a..b of f(i), with the extended range conventions
/// (empty when b = a-1, reciprocal of the skipped range when b < a-1).
inline LMonomial mono_range(int width, long long a, long long b,
                            const std::function<LMonomial(long long)>& f) {
    LMonomial acc(width);
    if (b >= a) {
        for (long long i = a; i <= b; ++i) acc = mono_mul(acc, f(i));
    } else if (b < a - 1) {
        for (long long i = b + 1; i <= a - 1; ++i) acc = mono_mul(acc, f(i).inverse());
    }
    return acc;
}

} // namespace detail

/// m_{i,j,0} = prod_{l=0}^{j-1} prod_{m=0}^{l} y_{3i+j-4l+6m-1}, with the
/// range conventions making it total in j (m_{i,-1,0} = m_{i,0,0} = 1, and
/// a genuine product of positive powers again for j <= -2).
inline LMonomial m_monomial_0(int width, long long i, long long j) {
    return detail::mono_range(width, 0, j - 1, [&](long long l) {
        return detail::mono_range(width, 0, l, [&](long long m) {
            return LMonomial::var(width, 3 * i + j - 4 * l + 6 * m - 1);
        });
    });
}

/// Memoized m_{i,j,k}: m_{i,j,-1} = 1/m_{i,j,0} and
/// m_{i,j,k} = m_{i-1,j,k-1} m_{i+1,j,k-1} / m_{i,j,k-2} for k >= 1.
class MTable {
public:
    explicit MTable(int width) : w_(width) {}

    int width() const { return w_; }

    const LMonomial& at(long long i, long long j, int k) {
        if (k < -1) throw input_error("m(i,j,k) needs k >= -1");
        auto key = std::make_tuple(i, j, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        LMonomial value(w_);
        if (k == 0)
            value = m_monomial_0(w_, i, j);
        else if (k == -1)
            value = m_monomial_0(w_, i, j).inverse();
        else
            value = mono_div(mono_mul(at(i - 1, j, k - 1), at(i + 1, j, k - 1)), at(i, j, k - 2));
        return memo_.emplace(key, std::move(value)).first->second;
    }

private:
    int w_;
    std::map<std::tuple<long long, long long, int>, LMonomial> memo_;
};

// ---------------------------------------------------------------------------
// The three routes to the F-polynomials
// ---------------------------------------------------------------------------

/// wt(I) with the j-shift: the product of y_{3r+s+j} over the elements.
inline LMonomial ideal_weight(int width, const std::vector<PosetElem>& ideal, long long j) {
    LMonomial m(width);
    for (const auto& e : ideal) m.mul_var(3 * e.r + e.s + j, 1);
    return m;
}

/// Order-ideal route: F_{j,k} as the generating function of J(P_k).
inline LPoly f_ideals(int width, long long j, const Poset& pk,
                      const std::vector<Bits>& ideal_masks) {
    std::vector<std::pair<LMonomial, long long>> terms;
    terms.reserve(ideal_masks.size());
    for (const auto& mask : ideal_masks)
        terms.emplace_back(ideal_weight(width, pk.members(mask), j), 1);
    return LPoly::from_terms(width, std::move(terms));
}

inline LPoly f_ideals(int width, long long j, int k) {
    Poset pk = build_P(k);
    return f_ideals(width, j, pk, enumerate_ideal_masks(pk));
}

/// Entry (a, b) (0-based) of the rotated initial matrix X_t of size t:
/// m_{-(t-1)+a+b, b-a, 0}, with variables shifted by j.
inline LMonomial x_matrix_entry(MTable& mt, int t, int a, int b, long long j) {
    return mt.at(-(t - 1) + a + b, b - a, 0).shifted(j);
}

/// ASM-pair route: F_{j,k} as the sum of X_{k+1}^A X_k^B over compatible
/// pairs.
inline LPoly f_asm(int width, long long j, int k, const AsmPairTables& tables) {
    if (tables.k != k) throw input_error("ASM tables built for a different k");
    MTable mt(width);
    auto family_monomials = [&](const std::vector<AsmMatrix>& family, int t) {
        std::vector<LMonomial> out;
        out.reserve(family.size());
        for (const auto& m : family) {
            LMonomial acc(width);
            for (int a = 0; a < t; ++a)
                for (int b = 0; b < t; ++b)
                    if (int e = m.at(a, b); e != 0)
                        acc = mono_mul(acc, x_matrix_entry(mt, t, a, b, j).pow(e));
            out.push_back(std::move(acc));
        }
        return out;
    };
    std::vector<LMonomial> upper = family_monomials(tables.asm_upper, k + 1);
    std::vector<LMonomial> lower = family_monomials(tables.asm_lower, k);
    std::vector<std::pair<LMonomial, long long>> terms;
    terms.reserve(tables.pairs.size());
    for (const auto& [ui, li] : tables.pairs)
        terms.emplace_back(
            mono_mul(upper[static_cast<std::size_t>(ui)], lower[static_cast<std::size_t>(li)]), 1);
    return LPoly::from_terms(width, std::move(terms));
}

inline LPoly f_asm(int width, long long j, int k) { return f_asm(width, j, k, AsmPairTables(k)); }

// ---------------------------------------------------------------------------
// The Dodgson-condensation specialization
// ---------------------------------------------------------------------------

/// sigma_j: +1 for j = 0, 3 (mod 4), -1 for j = 1, 2 (mod 4).
inline int sigma_sign(long long j) {
    long long r = ((j % 4) + 4) % 4;
    return (r == 0 || r == 3) ? 1 : -1;
}

/// The (k+1) x (k+1) matrix of signed monomials whose determinant computes
/// F_{j,k} under the specialization y_i = -1 for i = k+j (mod 2). Entries
/// only involve the surviving parity class.
inline std::vector<std::vector<LPoly>> dodgson_matrix(int width, long long j, int k) {
    MTable mt(width);
    std::vector<std::vector<LPoly>> x(static_cast<std::size_t>(k + 1));
    for (int a = 0; a <= k; ++a) {
        auto& row = x[static_cast<std::size_t>(a)];
        row.reserve(static_cast<std::size_t>(k + 1));
        for (int b = 0; b <= k; ++b)
            row.push_back(
                LPoly::from_mono(x_matrix_entry(mt, k + 1, a, b, j), sigma_sign(b - a)));
    }
    return x;
}

namespace detail {

inline void leibniz_det_rec(const std::vector<std::vector<LPoly>>& m, std::vector<int>& cols,
                            std::vector<bool>& used, int row, int sign, LPoly& acc,
                            LPoly partial) {
    int n = static_cast<int>(m.size());
    if (row == n) {
        acc = acc + (sign > 0 ? partial : -partial);
        return;
    }
    for (int c = 0; c < n; ++c) {
        if (used[static_cast<std::size_t>(c)]) continue;
        int inv = 0;
        for (int p = 0; p < row; ++p)
            if (cols[static_cast<std::size_t>(p)] > c) ++inv;
        used[static_cast<std::size_t>(c)] = true;
        cols[static_cast<std::size_t>(row)] = c;
        leibniz_det_rec(m, cols, used, row + 1, (inv % 2 == 0) ? sign : -sign, acc,
                        partial * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]);
        used[static_cast<std::size_t>(c)] = false;
    }
}

} // namespace detail

/// Symbolic determinant (Leibniz expansion; the matrices here are at most
/// 7 x 7 and entrywise monomial).
inline LPoly lpoly_determinant(const std::vector<std::vector<LPoly>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) throw input_error("determinant of an empty matrix");
    LPoly acc = LPoly::zero(m[0][0].width());
    std::vector<int> cols(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    detail::leibniz_det_rec(m, cols, used, 0, 1, acc, LPoly::one(m[0][0].width()));
    return acc;
}

/// Determinant route to the specialized F-polynomial.
inline LPoly dodgson_f(int width, long long j, int k) {
    return lpoly_determinant(dodgson_matrix(width, j, k));
}

// ---------------------------------------------------------------------------
// Exact rational linear algebra (for the collapse determinants)
// ---------------------------------------------------------------------------

inline Rat rat_determinant(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(c)]);
            det = -det;
        }
        const Rat& pv = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        det *= pv;
        for (int r = c + 1; r < n; ++r) {
            Rat factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / pv;
            if (factor.is_zero()) continue;
            for (int cc = c; cc < n; ++cc)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                    factor * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)];
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// Axis-aligned collapse, determinant side
// ---------------------------------------------------------------------------

/// The y-values of an axis-aligned 2m-gon from its signed side lengths:
/// odd-index y's are -1 (edge lines of equal direction are concurrent at
/// infinity), even-index y's come from the side-length cross ratio
/// y_{2t} = -(s_{2t-1} s_{2t+1}) / (s_{2t-3} s_{2t+3}). `scale` is the
/// monodromy scale a for the twisted case (1 when closed).
inline std::function<Rat(int)> y_from_sides(const std::vector<Rat>& sides, const Rat& scale) {
    int p = static_cast<int>(sides.size());
    if (p < 4 || p % 2 != 0) throw input_error("need an even number (>= 4) of sides");
    auto side_at = [sides, scale, p](long long t) { // t odd
        long long idx = (t - 1) / 2;
        long long q = idx >= 0 ? idx / p : -((-idx + p - 1) / p);
        long long r = idx - q * p;
        return sides[static_cast<std::size_t>(r)] * scale.pow(q);
    };
    int width = 2 * p;
    return [side_at, width](int residue) {
        long long i = residue == 0 ? width : residue;
        if (i % 2 != 0) return Rat(-1);
        Rat num = side_at(i - 1) * side_at(i + 1);
        Rat den = side_at(i - 3) * side_at(i + 3);
        return -(num / den);
    };
}

/// Closed collapse criterion: the specialized-F determinant vanishes at the
/// polygon's y-values. For a closed axis-aligned 2m-gon the relevant
/// polynomial is F_{j0, m-1} with j0 = m (mod 2).
inline bool collapse_determinant_closed(const std::vector<Rat>& sides) {
    int p = static_cast<int>(sides.size());
    Rat hsum(0), vsum(0);
    for (int t = 0; t < p; ++t)
        (t % 2 == 0 ? vsum : hsum) += sides[static_cast<std::size_t>(t)];
    if (!hsum.is_zero() || !vsum.is_zero())
        throw input_error("closed polygon needs zero-sum side families");
    int m = p / 2;
    int k = m - 1;
    long long j0 = m % 2;
    int width = 2 * p;
    auto y = y_from_sides(sides, Rat(1));
    MTable mt(width);
    std::vector<std::vector<Rat>> x(static_cast<std::size_t>(k + 1),
                                    std::vector<Rat>(static_cast<std::size_t>(k + 1)));
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            x[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                x_matrix_entry(mt, k + 1, a, b, j0).evaluate(y) * Rat(sigma_sign(b - a));
    return rat_determinant(std::move(x)).is_zero();
}

/// Twisted collapse criterion: in the F_{j0, m} matrix evaluated at the
/// y-values of a twisted axis-aligned 2m-gon whose monodromy scales both
/// axes by `scale`, the first and last columns are proportional.
inline bool collapse_determinant_twisted(const std::vector<Rat>& sides, const Rat& scale) {
    if (scale.is_zero()) throw input_error("monodromy scale must be nonzero");
    int p = static_cast<int>(sides.size());
    int m = p / 2;
    int k = m;
    long long j0 = (m % 2 == 0) ? 1 : 0;
    int width = 2 * p;
    auto y = y_from_sides(sides, scale);
    MTable mt(width);
    std::vector<std::vector<Rat>> x(static_cast<std::size_t>(k + 1),
                                    std::vector<Rat>(static_cast<std::size_t>(k + 1)));
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            x[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                x_matrix_entry(mt, k + 1, a, b, j0).evaluate(y) * Rat(sigma_sign(b - a));
    for (int a = 0; a < k; ++a) {
        Rat lhs = x[static_cast<std::size_t>(a)][0] * x[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(k)];
        Rat rhs = x[static_cast<std::size_t>(a + 1)][0] * x[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace pentagram
