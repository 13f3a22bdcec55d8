#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pentagram/errors.hpp"
#include "pentagram/poset.hpp"

namespace pentagram {

/// Alternating sign matrix candidate: k x k entries in {-1, 0, 1}.
struct AsmMatrix {
    int k = 0;
    std::vector<int8_t> a;

    explicit AsmMatrix(int size) : k(size), a(static_cast<std::size_t>(size) * size, 0) {}

    int8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * k + j]; }
    int at(int i, int j) const { return a[static_cast<std::size_t>(i) * k + j]; }

    static AsmMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        AsmMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.k; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.k)
                throw input_error("ASM rows must be square");
            for (int j = 0; j < m.k; ++j)
                m.at(i, j) = static_cast<int8_t>(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        return m;
    }

    static AsmMatrix identity(int size) {
        AsmMatrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const AsmMatrix& x, const AsmMatrix& y) {
        return x.k == y.k && x.a == y.a;
    }
    friend bool operator<(const AsmMatrix& x, const AsmMatrix& y) {
        return x.k != y.k ? x.k < y.k : x.a < y.a;
    }

    std::string str() const {
        std::string out;
        for (int i = 0; i < k; ++i) {
            out += "[";
            for (int j = 0; j < k; ++j) {
                if (j) out += " ";
                out += std::to_string(at(i, j));
            }
            out += "]";
        }
        return out;
    }
};

/// The defining conditions: entries in {-1,0,1}, nonzero entries of every
/// row and column alternate in sign, every row and column sums to 1.
/// Equivalently all row/column prefix sums lie in {0,1} and totals are 1.
inline bool is_asm(const AsmMatrix& m) {
    for (int i = 0; i < m.k; ++i) {
        int sum = 0;
        for (int j = 0; j < m.k; ++j) {
            int v = m.at(i, j);
            if (v < -1 || v > 1) return false;
            sum += v;
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    for (int j = 0; j < m.k; ++j) {
        int sum = 0;
        for (int i = 0; i < m.k; ++i) {
            sum += m.at(i, j);
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    return true;
}

namespace detail {

inline void enumerate_asm_rec(AsmMatrix& m, std::vector<int>& colsum, int i, int j, int rowsum,
                              std::vector<AsmMatrix>& out) {
    const int k = m.k;
    if (j == k) {
        if (rowsum != 1) return;
        if (i == k - 1) {
            bool full = true;
            for (int c = 0; c < k; ++c)
                if (colsum[static_cast<std::size_t>(c)] != 1) full = false;
            if (full) out.push_back(m);
            return;
        }
        enumerate_asm_rec(m, colsum, i + 1, 0, 0, out);
        return;
    }
    for (int v = -1; v <= 1; ++v) {
        int rs = rowsum + v;
        int cs = colsum[static_cast<std::size_t>(j)] + v;
        if (rs < 0 || rs > 1 || cs < 0 || cs > 1) continue;
        // Row and column sums must still be able to reach 1.
        if (rs == 0 && j == k - 1) continue;
        if (cs == 0 && i == k - 1) continue;
        m.at(i, j) = static_cast<int8_t>(v);
        colsum[static_cast<std::size_t>(j)] = cs;
        enumerate_asm_rec(m, colsum, i, j + 1, rs, out);
        colsum[static_cast<std::size_t>(j)] = cs - v;
        m.at(i, j) = 0;
    }
}

} // namespace detail

/// Brute-force enumeration of ASM(k) with prefix-sum pruning. Practical
/// through k = 6 (counts 1, 2, 7, 42, 429, 7436).
inline std::vector<AsmMatrix> enumerate_asm(int k) {
    if (k < 1) throw input_error("ASM(k) needs k >= 1");
    std::vector<AsmMatrix> out;
    AsmMatrix scratch(k);
    std::vector<int> colsum(static_cast<std::size_t>(k), 0);
    detail::enumerate_asm_rec(scratch, colsum, 0, 0, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// The EKLP bijection J(Q_k) <-> ASM(k)
// ---------------------------------------------------------------------------
//
// Forward: ideal -> height function H on the grid {(r,s) : r+s = k mod 2,
// |r|+|s| <= k} -> skew summation A* (a*_{ij} = H(-k+i+j, -i+j)/2, indices
// 0..k) -> ASM via the discrete mixed second difference.
//
// H(r,s) records the top of the ideal's fiber over (r,s): k+2 plus the
// largest t with (r,s,t) in the ideal, or 2|s| when the fiber is untouched.
// (Each element added to an ideal raises H by 4 at exactly one site, which
// is what makes the skew summation change by a single +-1 cross.)

namespace detail {

inline int height_at(const Poset& qk, const Bits& ideal, int k, int r, int s) {
    int lo = 2 * std::abs(s) - (k - 2);
    int hi = (k - 2) - 2 * std::abs(r);
    int best = 0;
    bool found = false;
    for (int t = hi; t >= lo; t -= 4) {
        int idx = qk.index_of({r, s, t});
        if (idx >= 0 && ideal.test(idx)) {
            best = t;
            found = true;
            break;
        }
    }
    return found ? k + 2 + best : 2 * std::abs(s);
}

} // namespace detail

/// Ideal of Q_k -> ASM(k).
inline AsmMatrix ideal_to_asm(const Poset& qk, const Bits& ideal, int k) {
    std::vector<std::vector<int>> astar(static_cast<std::size_t>(k + 1),
                                        std::vector<int>(static_cast<std::size_t>(k + 1), 0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
            int r = -k + i + j;
            int s = -i + j;
            int h = detail::height_at(qk, ideal, k, r, s);
            if (h % 2 != 0) throw algebra_error("height function must be even");
            astar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h / 2;
        }
    AsmMatrix m(k);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            int v = astar[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                    astar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] -
                    astar[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] -
                    astar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v % 2 != 0) throw algebra_error("skew summation difference must be even");
            m.at(i - 1, j - 1) = static_cast<int8_t>(v / 2);
        }
    return m;
}

inline AsmMatrix ideal_to_asm(const std::vector<PosetElem>& ideal, int k) {
    Poset qk = build_Q(k);
    return ideal_to_asm(qk, qk.mask_of(ideal), k);
}

/// ASM(k) -> ideal of Q_k, inverting each pipeline step: prefix sums with
/// the boundary a*_{0,j} = j, a*_{i,0} = i recover the skew summation, then
/// the heights, then the fiber tops.
inline Bits asm_to_ideal_mask(const Poset& qk, const AsmMatrix& m) {
    if (!is_asm(m)) throw input_error("matrix is not an alternating sign matrix");
    const int k = m.k;
    std::vector<std::vector<int>> astar(static_cast<std::size_t>(k + 1),
                                        std::vector<int>(static_cast<std::size_t>(k + 1), 0));
    for (int i = 0; i <= k; ++i) astar[static_cast<std::size_t>(i)][0] = i;
    for (int j = 0; j <= k; ++j) astar[0][static_cast<std::size_t>(j)] = j;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            astar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                astar[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
                astar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] -
                astar[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] -
                2 * m.at(i - 1, j - 1);
    Bits ideal(qk.size());
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
            int r = -k + i + j;
            int s = -i + j;
            int h = 2 * astar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (h == 2 * std::abs(s)) continue; // untouched fiber
            int top = h - (k + 2);
            int lo = 2 * std::abs(s) - (k - 2);
            for (int t = top; t >= lo; t -= 4) {
                int idx = qk.index_of({r, s, t});
                if (idx < 0)
                    throw input_error("matrix is not in the image of the bijection");
                ideal.set(idx);
            }
        }
    if (!qk.is_ideal(ideal))
        throw input_error("matrix is not in the image of the bijection");
    return ideal;
}

inline std::vector<PosetElem> asm_to_ideal(const AsmMatrix& m) {
    Poset qk = build_Q(m.k);
    return qk.members(asm_to_ideal_mask(qk, m));
}

// ---------------------------------------------------------------------------
// Compatibility
// ---------------------------------------------------------------------------

/// Ideals I of Q_{k+1} and J of Q_k are compatible when their union is an
/// ideal of P_k.
inline bool compatible_ideals(const std::vector<PosetElem>& upper,
                              const std::vector<PosetElem>& lower, int k) {
    Poset p = build_P(k);
    Bits mask = p.mask_of(upper).united(p.mask_of(lower));
    return p.is_ideal(mask);
}

/// ASMs are compatible when their ideals are.
inline bool compatible_asm(const AsmMatrix& upper, const AsmMatrix& lower) {
    if (upper.k != lower.k + 1) throw input_error("compatibility needs sizes k+1 and k");
    return compatible_ideals(asm_to_ideal(upper), asm_to_ideal(lower), lower.k);
}

/// Batch caches for the ASM-pair machinery at one k: both ASM families,
/// their ideals embedded into P_k, and the list of compatible index pairs.
struct AsmPairTables {
    int k;
    Poset p;           // P_k
    Poset q_upper;     // Q_{k+1}
    Poset q_lower;     // Q_k
    std::vector<AsmMatrix> asm_upper; // ASM(k+1)
    std::vector<AsmMatrix> asm_lower; // ASM(k)
    std::vector<Bits> ideal_upper_in_p;
    std::vector<Bits> ideal_lower_in_p;
    std::vector<std::pair<int, int>> pairs; // compatible (upper idx, lower idx)

    explicit AsmPairTables(int kk)
        : k(kk), p(build_P(kk)), q_upper(build_Q(kk + 1)), q_lower(build_Q(kk)) {
        asm_upper = enumerate_asm(k + 1);
        asm_lower = enumerate_asm(k);
        auto embed = [&](const Poset& q, const AsmMatrix& m) {
            Bits in_q = asm_to_ideal_mask(q, m);
            return p.mask_of(q.members(in_q));
        };
        ideal_upper_in_p.reserve(asm_upper.size());
        for (const auto& m : asm_upper) ideal_upper_in_p.push_back(embed(q_upper, m));
        ideal_lower_in_p.reserve(asm_lower.size());
        for (const auto& m : asm_lower) ideal_lower_in_p.push_back(embed(q_lower, m));
        if (p.size() <= 64) {
            // Single-word fast path; the pair scan is quadratic in the ASM
            // counts (7436 x 429 at k = 5).
            std::vector<std::uint64_t> below(static_cast<std::size_t>(p.size()));
            for (int i = 0; i < p.size(); ++i) below[static_cast<std::size_t>(i)] = p.below(i).w[0];
            std::vector<std::uint64_t> up, lo;
            for (const auto& b : ideal_upper_in_p) up.push_back(b.w[0]);
            for (const auto& b : ideal_lower_in_p) lo.push_back(b.w[0]);
            for (int i = 0; i < static_cast<int>(up.size()); ++i)
                for (int j = 0; j < static_cast<int>(lo.size()); ++j) {
                    std::uint64_t u = up[static_cast<std::size_t>(i)] | lo[static_cast<std::size_t>(j)];
                    std::uint64_t m = u;
                    bool ok = true;
                    while (m) {
                        int bit = __builtin_ctzll(m);
                        m &= m - 1;
                        if (below[static_cast<std::size_t>(bit)] & ~u) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) pairs.emplace_back(i, j);
                }
        } else {
            for (int i = 0; i < static_cast<int>(asm_upper.size()); ++i)
                for (int j = 0; j < static_cast<int>(asm_lower.size()); ++j) {
                    Bits u = ideal_upper_in_p[static_cast<std::size_t>(i)].united(
                        ideal_lower_in_p[static_cast<std::size_t>(j)]);
                    if (p.is_ideal(u)) pairs.emplace_back(i, j);
                }
        }
    }
};

} // namespace pentagram
