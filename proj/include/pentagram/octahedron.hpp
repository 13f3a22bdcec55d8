#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "pentagram/asm_matrix.hpp"
#include "pentagram/errors.hpp"
#include "pentagram/laurent.hpp"
#include "pentagram/rational.hpp"

namespace pentagram {

namespace detail {

template <class V>
struct OctOps;

template <>
struct OctOps<Rat> {
    static Rat div(const Rat& a, const Rat& b) {
        if (b.is_zero())
            throw algebra_error("interior octahedron value vanishes (non-generic data)");
        return a / b;
    }
};

template <>
struct OctOps<LPoly> {
    static LPoly div(const LPoly& a, const LPoly& b) {
        if (b.is_zero())
            throw algebra_error("interior octahedron value vanishes (non-generic data)");
        return poly_div_exact(a, b);
    }
};

} // namespace detail

/// Evaluate f at (0, 0, k) from the two initial layers
///   layer0(i, j)  = f_{i,j,0}   on |i|+|j| <= k,   i+j = k (mod 2)
///   layerm1(i, j) = f_{i,j,-1}  on |i|+|j| <= k-1, i+j = k+1 (mod 2)
/// by the recurrence f_{i,j,l} f_{i,j,l-2} = f_{i-1,j,l-1} f_{i+1,j,l-1}
/// + f_{i,j-1,l-1} f_{i,j+1,l-1}. Only the dependency pyramid of the target
/// is materialized.
template <class V>
V octahedron_value(int k, const std::function<V(int, int)>& layer0,
                   const std::function<V(int, int)>& layerm1) {
    if (k < 1) throw input_error("octahedron target needs k >= 1");
    std::map<std::tuple<int, int, int>, V> memo;
    std::function<V(int, int, int)> f = [&](int i, int j, int l) -> V {
        if (l == 0) return layer0(i, j);
        if (l == -1) return layerm1(i, j);
        auto key = std::make_tuple(i, j, l);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        V num = f(i - 1, j, l - 1) * f(i + 1, j, l - 1) + f(i, j - 1, l - 1) * f(i, j + 1, l - 1);
        V value = detail::OctOps<V>::div(num, f(i, j, l - 2));
        return memo.emplace(key, std::move(value)).first->second;
    };
    return f(0, 0, k);
}

/// The closed-form solution of the octahedron recurrence: the sum of
/// (X_{k+1})^A (Y_k)^{-B} over compatible ASM pairs, with X_{k+1} and Y_k
/// the 45-degree-rotated matrices of initial values. Serves as the
/// independent oracle against the recurrence above.
inline Rat octahedron_asm_sum(int k, const std::function<Rat(int, int)>& layer0,
                              const std::function<Rat(int, int)>& layerm1,
                              const AsmPairTables& tables) {
    if (tables.k != k) throw input_error("ASM tables built for a different k");
    auto x_entry = [&](int a, int b) { return layer0(-k + a + b, b - a); };      // 0-based
    auto y_entry = [&](int a, int b) { return layerm1(-k + 1 + a + b, b - a); }; // 0-based

    std::vector<Rat> xpow(tables.asm_upper.size(), Rat(1));
    for (std::size_t t = 0; t < tables.asm_upper.size(); ++t) {
        const AsmMatrix& m = tables.asm_upper[t];
        Rat acc(1);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                if (int e = m.at(a, b); e != 0) acc *= x_entry(a, b).pow(e);
        xpow[t] = acc;
    }
    std::vector<Rat> ypow(tables.asm_lower.size(), Rat(1));
    for (std::size_t t = 0; t < tables.asm_lower.size(); ++t) {
        const AsmMatrix& m = tables.asm_lower[t];
        Rat acc(1);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (int e = m.at(a, b); e != 0) acc *= y_entry(a, b).pow(-e);
        ypow[t] = acc;
    }
    Rat sum(0);
    for (const auto& [ui, li] : tables.pairs)
        sum += xpow[static_cast<std::size_t>(ui)] * ypow[static_cast<std::size_t>(li)];
    return sum;
}

} // namespace pentagram
