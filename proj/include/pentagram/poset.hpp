#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "pentagram/errors.hpp"

namespace pentagram {

/// Element (r, s, t) of one of the EKLP posets. Canonical ordering for
/// serialization and linear extensions is lexicographic on (t, r, s), which
/// is consistent with the partial order (covers increase t by one).
struct PosetElem {
    int r = 0;
    int s = 0;
    int t = 0;

    friend bool operator==(const PosetElem& a, const PosetElem& b) {
        return a.r == b.r && a.s == b.s && a.t == b.t;
    }
    friend bool operator<(const PosetElem& a, const PosetElem& b) {
        return std::tie(a.t, a.r, a.s) < std::tie(b.t, b.r, b.s);
    }
};

/// Membership of (r, s, t) in Q_k: the two-sided bound with both mod-4
/// congruences.
inline bool in_Q(int k, int r, int s, int t) {
    int lo = 2 * std::abs(s) - (k - 2);
    int hi = (k - 2) - 2 * std::abs(r);
    if (t < lo || t > hi) return false;
    auto cong4 = [](int a, int b) { return ((a - b) % 4 + 4) % 4 == 0; };
    return cong4(t, lo) && cong4(t, hi);
}

inline std::vector<PosetElem> q_elements(int k) {
    std::vector<PosetElem> out;
    for (int r = -(k - 2); r <= k - 2; ++r)
        for (int s = -(k - 2); s <= k - 2; ++s)
            for (int t = -(k - 2); t <= k - 2; ++t)
                if (in_Q(k, r, s, t)) out.push_back({r, s, t});
    std::sort(out.begin(), out.end());
    return out;
}

/// Dynamically-sized bitset over poset elements.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(int nbits = 0) : w(static_cast<std::size_t>((nbits + 63) / 64), 0) {}

    void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }

    bool contains(const Bits& other) const { // other subseteq this
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((other.w[i] & ~w[i]) != 0) return false;
        return true;
    }

    Bits united(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] |= o.w[i];
        return r;
    }

    int count() const {
        int c = 0;
        for (auto v : w) c += __builtin_popcountll(v);
        return c;
    }

    friend bool operator==(const Bits& a, const Bits& b) { return a.w == b.w; }
    friend bool operator<(const Bits& a, const Bits& b) { return a.w < b.w; }
};

/// Finite poset presented by its element list (sorted canonically) and the
/// full strict order relation, stored as a strictly-below bitmask per
/// element. Built from the cover relation by transitive closure.
class Poset {
public:
    explicit Poset(std::vector<PosetElem> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        int n = size();
        below_.assign(static_cast<std::size_t>(n), Bits(n));
        // Elements are sorted by t, so one pass accumulates the closure:
        // below(y) = union over covers x of y of below(x) + {x}.
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x) {
                if (!covers(elems_[static_cast<std::size_t>(x)],
                            elems_[static_cast<std::size_t>(y)]))
                    continue;
                below_[static_cast<std::size_t>(y)] =
                    below_[static_cast<std::size_t>(y)].united(below_[static_cast<std::size_t>(x)]);
                below_[static_cast<std::size_t>(y)].set(x);
            }
    }

    /// The defining cover relation: up one level in t, one unit step in (r,s).
    static bool covers(const PosetElem& lo, const PosetElem& hi) {
        return hi.t == lo.t + 1 && std::abs(hi.r - lo.r) + std::abs(hi.s - lo.s) == 1;
    }

    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<PosetElem>& elements() const { return elems_; }
    const Bits& below(int i) const { return below_[static_cast<std::size_t>(i)]; }

    bool less(int i, int j) const { return below_[static_cast<std::size_t>(j)].test(i); }

    int index_of(const PosetElem& e) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
        if (it == elems_.end() || !(*it == e)) return -1;
        return static_cast<int>(it - elems_.begin());
    }

    bool is_ideal(const Bits& mask) const {
        for (int i = 0; i < size(); ++i)
            if (mask.test(i) && !mask.contains(below_[static_cast<std::size_t>(i)])) return false;
        return true;
    }

    std::vector<PosetElem> members(const Bits& mask) const {
        std::vector<PosetElem> out;
        for (int i = 0; i < size(); ++i)
            if (mask.test(i)) out.push_back(elems_[static_cast<std::size_t>(i)]);
        return out;
    }

    Bits mask_of(const std::vector<PosetElem>& members) const {
        Bits m(size());
        for (const auto& e : members) {
            int i = index_of(e);
            if (i < 0) throw input_error("element is not in the poset");
            m.set(i);
        }
        return m;
    }

    /// Restriction to a subset of elements, keeping the induced order.
    Poset restricted_to(const std::vector<PosetElem>& subset) const {
        Poset r;
        r.elems_ = subset;
        std::sort(r.elems_.begin(), r.elems_.end());
        int n = static_cast<int>(r.elems_.size());
        std::vector<int> orig(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            int oi = index_of(r.elems_[static_cast<std::size_t>(i)]);
            if (oi < 0) throw input_error("restriction element is not in the poset");
            orig[static_cast<std::size_t>(i)] = oi;
        }
        r.below_.assign(static_cast<std::size_t>(n), Bits(n));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (less(orig[static_cast<std::size_t>(i)], orig[static_cast<std::size_t>(j)]))
                    r.below_[static_cast<std::size_t>(j)].set(i);
        return r;
    }

private:
    Poset() = default;
    std::vector<PosetElem> elems_;
    std::vector<Bits> below_;
};

/// P_k = Q_{k+1} (disjoint) union Q_k, ordered by the cover relation.
inline Poset build_P(int k) {
    if (k < 1) throw input_error("P_k needs k >= 1");
    std::vector<PosetElem> elems = q_elements(k + 1);
    std::vector<PosetElem> qk = q_elements(k);
    elems.insert(elems.end(), qk.begin(), qk.end());
    return Poset(std::move(elems));
}

/// Q_k with the order induced from P_k (covers inside P_k alternate between
/// the Q_k and Q_{k+1} layers, so the induced order is not generated by
/// covers within Q_k alone).
inline Poset build_Q(int k) {
    if (k < 1) throw input_error("Q_k needs k >= 1");
    return build_P(k).restricted_to(q_elements(k));
}

/// All order ideals (downward closed subsets), enumerated deterministically
/// by walking elements in the canonical linear extension: at each element,
/// branch on exclusion first, inclusion (when the strictly-below set is
/// already in) second.
inline std::vector<Bits> enumerate_ideal_masks(const Poset& p) {
    std::vector<Bits> out;
    Bits current(p.size());
    // Iterative DFS over (position, include?) decisions.
    struct Frame {
        int pos;
        int stage; // 0 = try exclude, 1 = try include, 2 = done
    };
    std::vector<Frame> stack{{0, 0}};
    std::vector<Bits> chosen{current};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.pos == p.size()) {
            out.push_back(chosen.back());
            stack.pop_back();
            chosen.pop_back();
            continue;
        }
        if (f.stage == 0) {
            f.stage = 1;
            stack.push_back({f.pos + 1, 0});
            chosen.push_back(chosen.back());
        } else if (f.stage == 1) {
            f.stage = 2;
            if (chosen.back().contains(p.below(f.pos))) {
                Bits next = chosen.back();
                next.set(f.pos);
                stack.push_back({f.pos + 1, 0});
                chosen.push_back(std::move(next));
            }
        } else {
            stack.pop_back();
            chosen.pop_back();
        }
    }
    return out;
}

inline std::vector<std::vector<PosetElem>> enumerate_ideals(const Poset& p) {
    std::vector<std::vector<PosetElem>> out;
    for (const auto& m : enumerate_ideal_masks(p)) out.push_back(p.members(m));
    return out;
}

} // namespace pentagram
