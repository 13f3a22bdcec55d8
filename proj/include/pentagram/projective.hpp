#pragma once

#include <array>
#include <ostream>
#include <string>

#include "pentagram/errors.hpp"
#include "pentagram/rational.hpp"

namespace pentagram {

namespace detail {

// Scale a rational triple to a primitive integer triple with the last
// nonzero entry positive. Projective objects are equal up to a nonzero
// scalar, so this canonical representative is free to choose; keeping the
// entries as coprime integers also stops coordinate growth under iterated
// meets and joins.
inline std::array<mpz_class, 3> canonical_triple(const Rat& a, const Rat& b, const Rat& c) {
    mpz_class l = lcm(lcm(a.den(), b.den()), c.den());
    std::array<mpz_class, 3> v{a.num() * (l / a.den()), b.num() * (l / b.den()),
                               c.num() * (l / c.den())};
    mpz_class g = gcd(gcd(v[0], v[1]), v[2]);
    if (g == 0) throw input_error("homogeneous triple must not be all zero");
    int last = v[2] != 0 ? 2 : (v[1] != 0 ? 1 : 0);
    if (sgn(v[last]) < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

inline std::array<mpz_class, 3> cross(const std::array<mpz_class, 3>& p,
                                      const std::array<mpz_class, 3>& q) {
    return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

inline mpz_class dot(const std::array<mpz_class, 3>& p, const std::array<mpz_class, 3>& q) {
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
}

inline std::array<mpz_class, 3> canonical_int_triple(std::array<mpz_class, 3> v) {
    mpz_class g = gcd(gcd(v[0], v[1]), v[2]);
    if (g == 0) throw input_error("homogeneous triple must not be all zero");
    int last = v[2] != 0 ? 2 : (v[1] != 0 ? 1 : 0);
    if (sgn(v[last]) < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

} // namespace detail

/// Point of the projective plane in homogeneous coordinates. Points at
/// infinity (third coordinate zero) are first-class citizens.
class HPoint {
public:
    HPoint(const Rat& x, const Rat& y, const Rat& z) : c_(detail::canonical_triple(x, y, z)) {}

    static HPoint affine(const Rat& x, const Rat& y) { return HPoint(x, y, Rat(1)); }

    static HPoint from_ints(std::array<mpz_class, 3> v) {
        HPoint p;
        p.c_ = detail::canonical_int_triple(std::move(v));
        return p;
    }

    const std::array<mpz_class, 3>& triple() const { return c_; }
    Rat coord(int i) const { return Rat(c_[static_cast<std::size_t>(i)]); }

    bool at_infinity() const { return c_[2] == 0; }

    Rat affine_x() const {
        if (at_infinity()) throw geometry_error("affine coordinates of a point at infinity");
        return Rat(c_[0], c_[2]);
    }
    Rat affine_y() const {
        if (at_infinity()) throw geometry_error("affine coordinates of a point at infinity");
        return Rat(c_[1], c_[2]);
    }

    // Canonical representatives make projective equality an exact compare;
    // proportionality via 2x2 minors is equivalent (property-tested).
    bool operator==(const HPoint& o) const { return c_ == o.c_; }
    bool operator!=(const HPoint& o) const { return c_ != o.c_; }

    std::string str() const {
        return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
    }

private:
    HPoint() = default;
    std::array<mpz_class, 3> c_;
};

/// Line of the projective plane: coefficient triple, point p on line l iff
/// dot(p, l) = 0. Same canonical-representative scheme as HPoint.
class HLine {
public:
    HLine(const Rat& a, const Rat& b, const Rat& c) : c_(detail::canonical_triple(a, b, c)) {}

    static HLine from_ints(std::array<mpz_class, 3> v) {
        HLine l;
        l.c_ = detail::canonical_int_triple(std::move(v));
        return l;
    }

    const std::array<mpz_class, 3>& triple() const { return c_; }
    Rat coeff(int i) const { return Rat(c_[static_cast<std::size_t>(i)]); }

    bool operator==(const HLine& o) const { return c_ == o.c_; }
    bool operator!=(const HLine& o) const { return c_ != o.c_; }

    std::string str() const {
        return "[" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + "]";
    }

private:
    HLine() = default;
    std::array<mpz_class, 3> c_;
};

inline bool incident(const HPoint& p, const HLine& l) {
    return detail::dot(p.triple(), l.triple()) == 0;
}

inline bool proportional_by_minors(const std::array<mpz_class, 3>& a,
                                   const std::array<mpz_class, 3>& b) {
    return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

/// Line through two distinct points (cross product of coordinate triples).
inline HLine join(const HPoint& p, const HPoint& q) {
    if (p == q) throw geometry_error("join of equal points " + p.str());
    return HLine::from_ints(detail::cross(p.triple(), q.triple()));
}

/// Intersection point of two distinct lines.
inline HPoint meet(const HLine& l, const HLine& m) {
    if (l == m) throw geometry_error("meet of equal lines " + l.str());
    return HPoint::from_ints(detail::cross(l.triple(), m.triple()));
}

inline bool collinear(const HPoint& a, const HPoint& b, const HPoint& c) {
    const auto& p = a.triple();
    const auto& q = b.triple();
    const auto& r = c.triple();
    mpz_class det = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
                    p[2] * (q[0] * r[1] - q[1] * r[0]);
    return det == 0;
}

inline bool concurrent(const HLine& a, const HLine& b, const HLine& c) {
    const auto& p = a.triple();
    const auto& q = b.triple();
    const auto& r = c.triple();
    mpz_class det = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
                    p[2] * (q[0] * r[1] - q[1] * r[0]);
    return det == 0;
}

/// Projective transformation as an invertible 3x3 matrix, canonicalized to a
/// primitive integer matrix with positive first nonzero entry (projective
/// maps are equal up to a nonzero scalar).
class ProjMap {
public:
    ProjMap(const std::array<std::array<Rat, 3>, 3>& m) { // NOLINT: implicit by design
        mpz_class l = 1;
        for (const auto& row : m)
            for (const auto& e : row) l = lcm(l, e.den());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const Rat& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                a_[idx(i, j)] = e.num() * (l / e.den());
            }
        canonicalize();
        if (det_int() == 0) throw input_error("projective map must be invertible");
    }

    static ProjMap identity() {
        return ProjMap({{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}});
    }

    // phi(x, y) = (a x + b, c y + d) as a projective map.
    static ProjMap axis_affine(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
        return ProjMap({{{a, Rat(0), b}, {Rat(0), c, d}, {Rat(0), Rat(0), Rat(1)}}});
    }

    static ProjMap translation(const Rat& dx, const Rat& dy) {
        return ProjMap::axis_affine(Rat(1), dx, Rat(1), dy);
    }

    Rat entry(int i, int j) const { return Rat(a_[idx(i, j)]); }
    const mpz_class& entry_int(int i, int j) const { return a_[idx(i, j)]; }

    HPoint operator()(const HPoint& p) const {
        std::array<mpz_class, 3> v;
        for (int i = 0; i < 3; ++i)
            v[static_cast<std::size_t>(i)] = a_[idx(i, 0)] * p.triple()[0] +
                                             a_[idx(i, 1)] * p.triple()[1] +
                                             a_[idx(i, 2)] * p.triple()[2];
        return HPoint::from_ints(std::move(v));
    }

    // Induced action on lines: l' = adj(T)^T l, so that T p lies on l' iff p
    // lies on l.
    HLine apply_to_line(const HLine& l) const {
        ProjMap inv = inverse();
        std::array<mpz_class, 3> v;
        for (int i = 0; i < 3; ++i)
            v[static_cast<std::size_t>(i)] = inv.a_[idx(0, i)] * l.triple()[0] +
                                             inv.a_[idx(1, i)] * l.triple()[1] +
                                             inv.a_[idx(2, i)] * l.triple()[2];
        return HLine::from_ints(std::move(v));
    }

    ProjMap compose(const ProjMap& o) const { // (*this) after o
        ProjMap r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                mpz_class s = 0;
                for (int k = 0; k < 3; ++k) s += a_[idx(i, k)] * o.a_[idx(k, j)];
                r.a_[idx(i, j)] = s;
            }
        r.canonicalize();
        return r;
    }

    ProjMap inverse() const {
        // Adjugate; the projective scale det(T) is dropped by canonicalize.
        ProjMap r;
        auto m = [&](int i, int j) -> const mpz_class& { return a_[idx(i, j)]; };
        r.a_[idx(0, 0)] = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
        r.a_[idx(0, 1)] = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
        r.a_[idx(0, 2)] = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
        r.a_[idx(1, 0)] = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
        r.a_[idx(1, 1)] = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
        r.a_[idx(1, 2)] = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
        r.a_[idx(2, 0)] = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
        r.a_[idx(2, 1)] = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
        r.a_[idx(2, 2)] = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        r.canonicalize();
        return r;
    }

    ProjMap power(long long k) const {
        if (k == 0) return identity();
        ProjMap base = k > 0 ? *this : inverse();
        unsigned long long n = k > 0 ? static_cast<unsigned long long>(k)
                                     : -static_cast<unsigned long long>(k);
        ProjMap acc = identity();
        while (n) {
            if (n & 1) acc = acc.compose(base);
            base = base.compose(base);
            n >>= 1;
        }
        return acc;
    }

    bool is_identity() const { return *this == identity(); }

    bool operator==(const ProjMap& o) const { return a_ == o.a_; }
    bool operator!=(const ProjMap& o) const { return a_ != o.a_; }

private:
    ProjMap() = default;

    static std::size_t idx(int i, int j) { return static_cast<std::size_t>(i * 3 + j); }

    mpz_class det_int() const {
        auto m = [&](int i, int j) -> const mpz_class& { return a_[idx(i, j)]; };
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    void canonicalize() {
        mpz_class g = 0;
        for (const auto& x : a_) g = gcd(g, x);
        if (g == 0) throw input_error("zero projective map");
        for (const auto& x : a_)
            if (x != 0) {
                if (sgn(x) < 0) g = -g;
                break;
            }
        for (auto& x : a_) x /= g;
    }

    std::array<mpz_class, 9> a_;
};

/// Cross ratio of four scalars: (a-b)(c-d) / ((a-c)(b-d)).
inline Rat cross_ratio(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    Rat den = (a - c) * (b - d);
    if (den.is_zero()) throw geometry_error("degenerate cross ratio: a = c or b = d");
    return (a - b) * (c - d) / den;
}

namespace detail {

// det(p, q, aux) with aux = e_i; chart factor for the cross ratio of
// collinear points. Scale factors of p and q cancel in the final ratio.
inline mpz_class chart_det(const HPoint& p, const HPoint& q, int i) {
    int u = (i + 1) % 3;
    int v = (i + 2) % 3;
    return p.triple()[static_cast<std::size_t>(u)] * q.triple()[static_cast<std::size_t>(v)] -
           p.triple()[static_cast<std::size_t>(v)] * q.triple()[static_cast<std::size_t>(u)];
}

} // namespace detail

/// Cross ratio of four collinear points, chart-independent. The auxiliary
/// chart point e_i is chosen off the common line deterministically: i is the
/// index of the line coefficient with maximal absolute value.
inline Rat cross_ratio_points(const HPoint& p1, const HPoint& p2, const HPoint& p3,
                              const HPoint& p4) {
    if (p1 == p3 || p2 == p4)
        throw geometry_error("degenerate cross ratio: repeated 1st/3rd or 2nd/4th point");
    HLine l = join(p1, p3);
    if (!incident(p2, l) || !incident(p4, l))
        throw geometry_error("cross ratio of non-collinear points");
    int i = 0;
    for (int t = 1; t < 3; ++t)
        if (abs(l.triple()[static_cast<std::size_t>(t)]) >
            abs(l.triple()[static_cast<std::size_t>(i)]))
            i = t;
    mpz_class d12 = detail::chart_det(p1, p2, i);
    mpz_class d34 = detail::chart_det(p3, p4, i);
    mpz_class d13 = detail::chart_det(p1, p3, i);
    mpz_class d24 = detail::chart_det(p2, p4, i);
    // d13, d24 nonzero because p1 != p3, p2 != p4 and e_i is off the line.
    return Rat(d12 * d34, d13 * d24);
}

/// Cross ratio of four concurrent lines: the cross ratio of their traces on
/// any auxiliary line avoiding the common point.
inline Rat cross_ratio_lines(const HLine& l1, const HLine& l2, const HLine& l3, const HLine& l4) {
    if (l1 == l3 || l2 == l4)
        throw geometry_error("degenerate cross ratio: repeated 1st/3rd or 2nd/4th line");
    HPoint p = meet(l1, l3);
    if (!incident(p, l2) || !incident(p, l4))
        throw geometry_error("cross ratio of non-concurrent lines");
    int i = 0;
    for (int t = 1; t < 3; ++t)
        if (abs(p.triple()[static_cast<std::size_t>(t)]) >
            abs(p.triple()[static_cast<std::size_t>(i)]))
            i = t;
    std::array<Rat, 3> coeffs{Rat(0), Rat(0), Rat(0)};
    coeffs[static_cast<std::size_t>(i)] = Rat(1);
    HLine aux(coeffs[0], coeffs[1], coeffs[2]); // e_i, not through p since p_i != 0
    return cross_ratio_points(meet(l1, aux), meet(l2, aux), meet(l3, aux), meet(l4, aux));
}

inline std::ostream& operator<<(std::ostream& os, const HPoint& p) { return os << p.str(); }
inline std::ostream& operator<<(std::ostream& os, const HLine& l) { return os << l.str(); }

} // namespace pentagram
