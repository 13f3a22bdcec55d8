#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentagram/errors.hpp"
#include "pentagram/projective.hpp"
#include "pentagram/rational.hpp"
#include "pentagram/rng.hpp"

namespace pentagram {

/// Twisted polygon: a bi-infinite vertex sequence A_i with A_{i+n} = phi(A_i),
/// indexed by Z or by 1/2 + Z. Indices are handled as *doubled* integers
/// throughout, so the vertex of index i lives at doubled index 2i and the
/// vertex of index i + 1/2 at 2i + 1; this keeps all index arithmetic in
/// integers. One period is stored, starting at index 1 (doubled 2) for
/// integer-indexed polygons and at 1/2 (doubled 1) for half-indexed ones;
/// everything else is reached through the monodromy.
class TwistedPolygon {
public:
    TwistedPolygon(std::vector<HPoint> vertices, ProjMap monodromy, bool half_indexed)
        : n_(static_cast<int>(vertices.size())),
          start2_(half_indexed ? 1 : 2),
          verts_(std::move(vertices)),
          mono_(std::move(monodromy)) {
        if (n_ < 4) throw input_error("twisted polygon needs n >= 4 vertices");
        for (int i = 0; i + 1 < n_; ++i)
            if (verts_[static_cast<std::size_t>(i)] == verts_[static_cast<std::size_t>(i + 1)])
                throw input_error("consecutive vertices coincide");
        if (verts_[static_cast<std::size_t>(n_ - 1)] == mono_(verts_[0]))
            throw input_error("consecutive vertices coincide across the period");
    }

    static TwistedPolygon closed(std::vector<HPoint> vertices, bool half_indexed = false) {
        return TwistedPolygon(std::move(vertices), ProjMap::identity(), half_indexed);
    }

    int n() const { return n_; }
    bool half_indexed() const { return start2_ == 1; }
    const ProjMap& monodromy() const { return mono_; }
    bool is_closed() const { return mono_.is_identity(); }
    const std::vector<HPoint>& stored_vertices() const { return verts_; }

    /// Vertex at doubled index d (d must match the polygon's parity class).
    HPoint vertex2(long long d) const {
        if (((d - start2_) & 1) != 0)
            throw input_error("vertex index has the wrong parity class");
        long long m = (d - start2_) / 2;
        long long q = m >= 0 ? m / n_ : -((-m + n_ - 1) / n_); // floor division
        long long r = m - q * n_;
        const HPoint& base = verts_[static_cast<std::size_t>(r)];
        if (q == 0) return base;
        return mono_.power(q)(base);
    }

    /// Vertex of integer index i (only for integer-indexed polygons).
    HPoint vertex(long long i) const { return vertex2(2 * i); }

    TwistedPolygon transformed(const ProjMap& psi) const {
        std::vector<HPoint> vs;
        vs.reserve(static_cast<std::size_t>(n_));
        for (const auto& v : verts_) vs.push_back(psi(v));
        return TwistedPolygon(std::move(vs), psi.compose(mono_).compose(psi.inverse()),
                              half_indexed());
    }

    /// Projective equivalence with identical indexing: psi with psi(A_i)=B_i.
    bool same_polygon(const TwistedPolygon& o) const {
        if (n_ != o.n_ || start2_ != o.start2_) return false;
        for (int i = 0; i < n_; ++i)
            if (verts_[static_cast<std::size_t>(i)] != o.verts_[static_cast<std::size_t>(i)])
                return false;
        return mono_ == o.mono_;
    }

private:
    int n_;
    int start2_;
    std::vector<HPoint> verts_;
    ProjMap mono_;
};

/// One output vertex of the pentagram map: B at doubled index e is the meet
/// of the diagonals joining the input vertices at doubled e-3, e+1 and
/// e-1, e+3.
inline HPoint pentagram_vertex(const TwistedPolygon& a, long long e) {
    HPoint p1 = a.vertex2(e - 3), p2 = a.vertex2(e + 1);
    HPoint q1 = a.vertex2(e - 1), q2 = a.vertex2(e + 3);
    if (p1 == p2 || q1 == q2)
        throw geometry_error("degenerate diagonals at doubled index " + std::to_string(e));
    HLine l1 = join(p1, p2), l2 = join(q1, q2);
    if (l1 == l2)
        throw geometry_error("degenerate diagonals at doubled index " + std::to_string(e));
    return meet(l1, l2);
}

/// One period of T(A) as raw points, starting at the flipped parity class's
/// canonical first index. Exposed separately from pentagram() because a
/// polygon whose vertices alternate between two lines collapses to a single
/// repeated point, which is observable here but not constructible as a
/// TwistedPolygon.
inline std::vector<HPoint> pentagram_points(const TwistedPolygon& a) {
    long long start = a.half_indexed() ? 2 : 1;
    std::vector<HPoint> out;
    out.reserve(static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i) out.push_back(pentagram_vertex(a, start + 2 * i));
    return out;
}

/// The pentagram map T. Output indexing class is flipped, the monodromy and
/// the period are unchanged.
inline TwistedPolygon pentagram_map(const TwistedPolygon& a) {
    return TwistedPolygon(pentagram_points(a), a.monodromy(), !a.half_indexed());
}

inline TwistedPolygon pentagram_iterate(const TwistedPolygon& a, int k) {
    TwistedPolygon p = a;
    for (int i = 0; i < k; ++i) p = pentagram_map(p);
    return p;
}

/// One period of T^k(A) as raw points plus their window start (doubled
/// index). The first k-1 steps must be proper polygons; the final step may
/// be arbitrarily degenerate (e.g. the full collapse of a centrally
/// symmetric axis-aligned polygon to one point).
struct RawPeriod {
    std::vector<HPoint> points;
    long long start2; // doubled index of points[0]
    ProjMap monodromy;
};

inline RawPeriod pentagram_iterate_points(const TwistedPolygon& a, int k) {
    if (k < 1) throw input_error("need at least one pentagram step");
    TwistedPolygon p = pentagram_iterate(a, k - 1);
    return {pentagram_points(p), p.half_indexed() ? 2 : 1, p.monodromy()};
}

/// Exact collinearity of a set of points (trivially true for <= 2 distinct).
inline bool all_collinear(const std::vector<HPoint>& pts) {
    std::vector<HPoint> distinct;
    for (const auto& p : pts) {
        bool seen = false;
        for (const auto& q : distinct) seen = seen || p == q;
        if (!seen) distinct.push_back(p);
    }
    if (distinct.size() <= 2) return true;
    HLine l = join(distinct[0], distinct[1]);
    for (std::size_t i = 2; i < distinct.size(); ++i)
        if (!incident(distinct[i], l)) return false;
    return true;
}

/// The two-line collapse criterion on a raw period: the vertices whose
/// doubled index is congruent mod 4 form two families; each family,
/// extended by one monodromy image to cover the wrap, must be collinear.
inline bool parity_classes_collinear(const RawPeriod& period) {
    for (int offset = 0; offset < 2; ++offset) {
        std::vector<HPoint> cls;
        for (std::size_t i = static_cast<std::size_t>(offset); i < period.points.size(); i += 2)
            cls.push_back(period.points[i]);
        if (!cls.empty()) cls.push_back(period.monodromy(cls.front()));
        if (!all_collinear(cls)) return false;
    }
    return true;
}

namespace detail {

// y_j for one residue j (1 <= j <= 2n), as a function of doubled indices.
inline Rat y_param_at(const TwistedPolygon& a, long long j) {
    bool vertex_type = ((j & 1) != 0) == a.half_indexed();
    try {
        if (vertex_type) {
            HPoint v = a.vertex2(j);
            HLine l1 = join(v, a.vertex2(j - 4));
            HLine l2 = join(v, a.vertex2(j - 2));
            HLine l3 = join(v, a.vertex2(j + 2));
            HLine l4 = join(v, a.vertex2(j + 4));
            Rat chi = cross_ratio_lines(l1, l2, l3, l4);
            if (chi.is_zero())
                throw geometry_error("three consecutive vertices collinear");
            return -chi.inverse();
        }
        HPoint p = a.vertex2(j - 1), q = a.vertex2(j + 1);
        HLine l = join(p, q);
        HLine lb = join(a.vertex2(j - 5), a.vertex2(j - 3));
        HLine lc = join(a.vertex2(j + 3), a.vertex2(j + 5));
        if (lb == l || lc == l)
            throw geometry_error("edge line coincides with a neighbor line");
        return -cross_ratio_points(meet(lb, l), p, q, meet(lc, l));
    } catch (const geometry_error& e) {
        throw geometry_error("degenerate y-parameter at index " + std::to_string(j) + ": " +
                             e.what());
    }
}

inline Rat x_coord_at(const TwistedPolygon& a, long long j) {
    bool vertex_type = ((j & 1) != 0) == a.half_indexed();
    try {
        if (vertex_type) {
            // x_{2k} = chi(A_{k-2}, A_{k-1}, L(A_k A_{k+1}) ^ L0, L(A_{k+1} A_{k+2}) ^ L0)
            // with L0 = L(A_{k-2} A_{k-1}).
            HPoint p1 = a.vertex2(j - 4), p2 = a.vertex2(j - 2);
            HLine l0 = join(p1, p2);
            HLine l1 = join(a.vertex2(j), a.vertex2(j + 2));
            HLine l2 = join(a.vertex2(j + 2), a.vertex2(j + 4));
            if (l1 == l0 || l2 == l0)
                throw geometry_error("coincident lines in x-coordinate");
            return cross_ratio_points(p1, p2, meet(l1, l0), meet(l2, l0));
        }
        // x_{2k+1} = chi(A_{k+2}, A_{k+1}, L(A_k A_{k-1}) ^ L0, L(A_{k-1} A_{k-2}) ^ L0)
        // with L0 = L(A_{k+2} A_{k+1}).
        HPoint p1 = a.vertex2(j + 3), p2 = a.vertex2(j + 1);
        HLine l0 = join(p1, p2);
        HLine l1 = join(a.vertex2(j - 1), a.vertex2(j - 3));
        HLine l2 = join(a.vertex2(j - 3), a.vertex2(j - 5));
        if (l1 == l0 || l2 == l0)
            throw geometry_error("coincident lines in x-coordinate");
        return cross_ratio_points(p1, p2, meet(l1, l0), meet(l2, l0));
    } catch (const geometry_error& e) {
        throw geometry_error("degenerate x-coordinate at index " + std::to_string(j) + ": " +
                             e.what());
    }
}

} // namespace detail

/// The 2n y-parameters y_1 .. y_{2n}; y_{j+2n} = y_j. Vertex-type indices
/// (j/2 an index of A) carry the negative inverse cross ratio of the four
/// lines through a vertex; edge-type indices the negative cross ratio of
/// four points on an edge line.
inline std::vector<Rat> y_params(const TwistedPolygon& a) {
    std::vector<Rat> y;
    y.reserve(static_cast<std::size_t>(2 * a.n()));
    for (long long j = 1; j <= 2 * a.n(); ++j) y.push_back(detail::y_param_at(a, j));
    return y;
}

/// Schwartz's 2n cross-ratio coordinates x_1 .. x_{2n}.
inline std::vector<Rat> x_coords(const TwistedPolygon& a) {
    std::vector<Rat> x;
    x.reserve(static_cast<std::size_t>(2 * a.n()));
    for (long long j = 1; j <= 2 * a.n(); ++j) x.push_back(detail::x_coord_at(a, j));
    return x;
}

/// E = x_2 x_4 ... x_{2n} and O = x_1 x_3 ... x_{2n-1}; the pentagram map
/// swaps them.
inline std::pair<Rat, Rat> invariant_products(const TwistedPolygon& a) {
    std::vector<Rat> x = x_coords(a);
    Rat e(1), o(1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if ((i + 1) % 2 == 0)
            e *= x[i];
        else
            o *= x[i];
    }
    return {e, o};
}

/// Signed side lengths of an axis-aligned polygon with alternating
/// horizontal/vertical edges. s[j] is the odd-indexed s_{2j+1}, the length of
/// the edge from A_j to A_{j+1}, positive when the step goes right or up.
/// For a closed polygon scale = 1; for a twisted one whose monodromy is
/// (x,y) -> (a x + b, a y + d) the sides repeat with s_{t+2p} = a s_t.
struct AxisSides {
    std::vector<Rat> s; // s[j] = s_{2j+1}, j = 0 .. p-1 (p = period)
    Rat scale{1};

    int period() const { return static_cast<int>(s.size()); }

    /// s_t for any odd integer t (t = 2j+1).
    Rat at_odd(long long t) const {
        if ((t & 1) == 0) throw input_error("side index must be odd");
        long long p = period();
        long long j = (t - 1) / 2;
        long long q = j >= 0 ? j / p : -((-j + p - 1) / p);
        long long r = j - q * p;
        return s[static_cast<std::size_t>(r)] * scale.pow(q);
    }
};

/// Extract the side lengths of an axis-aligned polygon. Accepts a closed
/// polygon or a twisted one whose monodromy scales both axes equally
/// (fixes every point at infinity).
inline AxisSides side_lengths(const TwistedPolygon& a) {
    if (a.half_indexed()) throw input_error("side lengths need an integer-indexed polygon");
    int p = a.n();
    if (p % 2 != 0) throw input_error("axis-aligned polygon needs an even number of vertices");
    AxisSides out;
    if (!a.is_closed()) {
        const ProjMap& m = a.monodromy();
        bool affine_diag = m.entry_int(0, 1) == 0 && m.entry_int(1, 0) == 0 &&
                           m.entry_int(2, 0) == 0 && m.entry_int(2, 1) == 0 &&
                           m.entry_int(0, 0) == m.entry_int(1, 1) && m.entry_int(2, 2) != 0;
        if (!affine_diag)
            throw input_error("polygon is not closed and its monodromy does not fix "
                              "every point at infinity");
        out.scale = Rat(m.entry_int(0, 0), m.entry_int(2, 2));
    }
    out.s.reserve(static_cast<std::size_t>(p));
    int prev_dir = -1; // 0 horizontal, 1 vertical
    for (long long j = 0; j < p; ++j) {
        HPoint u = a.vertex2(2 * j), v = a.vertex2(2 * (j + 1));
        if (u.at_infinity() || v.at_infinity())
            throw input_error("axis-aligned polygon has a vertex at infinity");
        Rat dx = v.affine_x() - u.affine_x();
        Rat dy = v.affine_y() - u.affine_y();
        int dir;
        if (dy.is_zero() && !dx.is_zero())
            dir = 0;
        else if (dx.is_zero() && !dy.is_zero())
            dir = 1;
        else
            throw input_error("edge " + std::to_string(j) + " is not axis-aligned");
        if (prev_dir == dir)
            throw input_error("edges do not alternate directions at edge " + std::to_string(j));
        prev_dir = dir;
        out.s.push_back(dir == 0 ? dx : dy);
    }
    return out;
}

/// Build an axis-aligned polygon from alternating horizontal/vertical steps.
/// The first edge out of the base point is horizontal with length horiz[0].
/// Closed case (no scale): both families must sum to zero. Twisted case:
/// the monodromy is (x,y) -> (a x + b, a y + d) with a = scale, fixing every
/// point at infinity; b and d are determined by one traversal.
inline TwistedPolygon make_axis_aligned(const std::vector<Rat>& horiz,
                                        const std::vector<Rat>& vert,
                                        std::optional<Rat> scale = std::nullopt,
                                        HPoint base = HPoint::affine(Rat(0), Rat(0))) {
    if (horiz.size() != vert.size() || horiz.size() < 2)
        throw input_error("need equal numbers (>= 2) of horizontal and vertical sides");
    for (const auto& v : horiz)
        if (v.is_zero()) throw input_error("zero-length side");
    for (const auto& v : vert)
        if (v.is_zero()) throw input_error("zero-length side");
    Rat hs(0), vs(0);
    for (const auto& v : horiz) hs += v;
    for (const auto& v : vert) vs += v;
    if (!scale) {
        if (!hs.is_zero() || !vs.is_zero())
            throw input_error("closed axis-aligned polygon needs zero-sum side families");
    } else if (scale->is_zero()) {
        throw input_error("monodromy scale must be nonzero");
    }

    std::vector<HPoint> verts;
    Rat x = base.affine_x(), y = base.affine_y();
    verts.push_back(HPoint::affine(x, y));
    for (std::size_t i = 0; i < horiz.size(); ++i) {
        x += horiz[i];
        verts.push_back(HPoint::affine(x, y));
        y += vert[i];
        if (i + 1 < horiz.size()) verts.push_back(HPoint::affine(x, y));
    }
    if (!scale) return TwistedPolygon::closed(std::move(verts));
    // phi maps A_1 = base to A_{2m+1} = base + (hs, vs).
    const Rat& a = *scale;
    Rat b = base.affine_x() + hs - a * base.affine_x();
    Rat d = base.affine_y() + vs - a * base.affine_y();
    return TwistedPolygon(std::move(verts), ProjMap::axis_affine(a, b, a, d), false);
}

/// True iff T can be applied k times with every intermediate stage fully
/// non-degenerate: all cross ratios and intersections defined, no three
/// consecutive vertices collinear, at every stage including the last.
inline bool is_generic(const TwistedPolygon& a, int k) {
    try {
        TwistedPolygon p = a;
        for (int step = 0;; ++step) {
            for (long long i = 0; i < p.n(); ++i) {
                long long d = (p.half_indexed() ? 1 : 2) + 2 * i;
                if (collinear(p.vertex2(d - 2), p.vertex2(d), p.vertex2(d + 2))) return false;
            }
            std::vector<Rat> y = y_params(p);
            std::vector<Rat> x = x_coords(p);
            for (const auto& v : y)
                if (v.is_zero()) return false;
            for (const auto& v : x)
                if (v.is_zero()) return false;
            if (step == k) break;
            p = pentagram_map(p);
        }
        return true;
    } catch (const geometry_error&) {
        return false;
    } catch (const input_error&) {
        return false;
    }
}

/// Deterministic random twisted polygon: integer vertex coordinates uniform
/// in [-coord_bound, coord_bound]^2, plus (for the twisted case) a small
/// integer monodromy with nonzero determinant. Resamples until the result
/// passes is_generic(., 1), up to 100 attempts.
inline TwistedPolygon random_polygon(int n, std::uint64_t seed, bool closed,
                                     int coord_bound = 12) {
    if (n < 4) throw input_error("twisted polygon needs n >= 4 vertices");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            std::vector<HPoint> verts;
            verts.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                verts.push_back(HPoint::affine(Rat(rng.in_range(-coord_bound, coord_bound)),
                                               Rat(rng.in_range(-coord_bound, coord_bound))));
            ProjMap mono = ProjMap::identity();
            if (!closed) {
                std::array<std::array<Rat, 3>, 3> m;
                mpz_class det;
                do {
                    for (auto& row : m)
                        for (auto& e : row) e = Rat(rng.in_range(-2, 2));
                    // quick determinant probe through ProjMap construction
                    det = 0;
                    auto v = [&](int i, int j) {
                        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].num();
                    };
                    det = v(0, 0) * (v(1, 1) * v(2, 2) - v(1, 2) * v(2, 1)) -
                          v(0, 1) * (v(1, 0) * v(2, 2) - v(1, 2) * v(2, 0)) +
                          v(0, 2) * (v(1, 0) * v(2, 1) - v(1, 1) * v(2, 0));
                } while (det == 0);
                mono = ProjMap(m);
            }
            TwistedPolygon p(std::move(verts), mono, false);
            if (is_generic(p, 1)) return p;
        } catch (const input_error&) {
            // consecutive duplicates etc.: resample
        }
    }
    throw generation_error("random polygon generation failed after 100 attempts");
}

} // namespace pentagram
