#include <gtest/gtest.h>

#include "pentagram/projective.hpp"
#include "pentagram/rng.hpp"

using namespace pentagram;

namespace {

HPoint rand_point(SplitMix64& rng) {
    while (true) {
        Rat x(rng.in_range(-9, 9)), y(rng.in_range(-9, 9)), z(rng.in_range(-3, 3));
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        return HPoint(x, y, z);
    }
}

ProjMap rand_map(SplitMix64& rng) {
    while (true) {
        std::array<std::array<Rat, 3>, 3> m;
        for (auto& row : m)
            for (auto& e : row) e = Rat(rng.in_range(-4, 4));
        try {
            return ProjMap(m);
        } catch (const input_error&) {
        }
    }
}

} // namespace

TEST(Projective, JoinExamples) {
    HLine l = join(HPoint(Rat(1), Rat(0), Rat(1)), HPoint(Rat(0), Rat(1), Rat(1)));
    EXPECT_EQ(l, HLine(Rat(-1), Rat(-1), Rat(1)));
    EXPECT_EQ(join(HPoint(Rat(0), Rat(0), Rat(1)), HPoint(Rat(1), Rat(0), Rat(1))),
              HLine(Rat(0), Rat(1), Rat(0)));
    EXPECT_THROW(join(HPoint(Rat(2), Rat(4), Rat(2)), HPoint(Rat(1), Rat(2), Rat(1))),
                 geometry_error);
}

TEST(Projective, MeetExamples) {
    EXPECT_EQ(meet(HLine(Rat(0), Rat(1), Rat(0)), HLine(Rat(1), Rat(0), Rat(0))),
              HPoint(Rat(0), Rat(0), Rat(1)));
    // distinct parallels meet at infinity
    EXPECT_EQ(meet(HLine(Rat(1), Rat(0), Rat(-1)), HLine(Rat(1), Rat(0), Rat(-2))),
              HPoint(Rat(0), Rat(1), Rat(0)));
    EXPECT_THROW(meet(HLine(Rat(1), Rat(0), Rat(-1)), HLine(Rat(2), Rat(0), Rat(-2))),
                 geometry_error);
}

TEST(Projective, JoinMeetRoundTrip) {
    SplitMix64 rng(3);
    int done = 0;
    while (done < 100) {
        HPoint p = rand_point(rng), q = rand_point(rng), r = rand_point(rng);
        if (p == q || q == r || p == r || collinear(p, q, r)) continue;
        EXPECT_EQ(meet(join(p, q), join(p, r)), p);
        EXPECT_EQ(meet(join(p, q), join(q, r)), q);
        // r off the line through p and q
        EXPECT_FALSE(incident(r, join(p, q)));
        ++done;
    }
}

TEST(Projective, EqualityViaMinors) {
    SplitMix64 rng(5);
    for (int i = 0; i < 200; ++i) {
        HPoint p = rand_point(rng), q = rand_point(rng);
        EXPECT_EQ(p == q, proportional_by_minors(p.triple(), q.triple()));
        // scaling is invisible
        HPoint scaled(p.coord(0) * Rat(-3, 7), p.coord(1) * Rat(-3, 7), p.coord(2) * Rat(-3, 7));
        EXPECT_EQ(p, scaled);
    }
}

TEST(CrossRatio, ScalarExamples) {
    EXPECT_EQ(cross_ratio(Rat(0), Rat(1), Rat(2), Rat(3)), Rat(1, 4));
    EXPECT_EQ(cross_ratio(Rat(0), Rat(1), Rat(1), Rat(5)), Rat(1));
    EXPECT_THROW(cross_ratio(Rat(1), Rat(2), Rat(1), Rat(3)), geometry_error);
    EXPECT_THROW(cross_ratio(Rat(1), Rat(2), Rat(3), Rat(2)), geometry_error);
}

TEST(CrossRatio, AffineInvariance) {
    SplitMix64 rng(7);
    int done = 0;
    while (done < 100) {
        Rat a(rng.in_range(-20, 20)), b(rng.in_range(-20, 20)), c(rng.in_range(-20, 20)),
            d(rng.in_range(-20, 20));
        if (a == c || b == d) continue;
        auto f = [](const Rat& z) { return Rat(2) * z + Rat(3); };
        EXPECT_EQ(cross_ratio(a, b, c, d), cross_ratio(f(a), f(b), f(c), f(d)));
        // the symmetry chi(a,b,c,d) = chi(c,d,a,b)
        EXPECT_EQ(cross_ratio(a, b, c, d), cross_ratio(c, d, a, b));
        ++done;
    }
}

TEST(CrossRatio, CollinearPoints) {
    auto pt = [](long long x) { return HPoint(Rat(x), Rat(0), Rat(1)); };
    EXPECT_EQ(cross_ratio_points(pt(0), pt(1), pt(2), pt(3)), Rat(1, 4));
    // fourth point at infinity on the x-axis
    EXPECT_EQ(cross_ratio_points(pt(0), pt(1), pt(2), HPoint(Rat(1), Rat(0), Rat(0))), Rat(1, 2));
    EXPECT_THROW(cross_ratio_points(pt(0), pt(1), pt(2), HPoint(Rat(3), Rat(1), Rat(1))),
                 geometry_error); // not collinear
    EXPECT_THROW(cross_ratio_points(pt(0), pt(1), pt(0), pt(3)), geometry_error);
}

TEST(CrossRatio, ConcurrentLines) {
    // four lines through the origin with slopes 0, 1, 2, 3
    HLine l0(Rat(0), Rat(1), Rat(0));
    HLine l1(Rat(1), Rat(-1), Rat(0));
    HLine l2(Rat(2), Rat(-1), Rat(0));
    HLine l3(Rat(3), Rat(-1), Rat(0));
    EXPECT_EQ(cross_ratio_lines(l0, l1, l2, l3), Rat(1, 4));
    // the slope chart gives the same value
    EXPECT_EQ(cross_ratio(Rat(0), Rat(1), Rat(2), Rat(3)), Rat(1, 4));
    // repeated second/third line gives 1
    EXPECT_EQ(cross_ratio_lines(l0, l1, l1, l3), Rat(1));
    EXPECT_THROW(cross_ratio_lines(l0, l1, l0, l3), geometry_error);
    // cross-check with explicit auxiliary lines: traces on x = 1 and on y = -x + 5
    HLine aux1(Rat(1), Rat(0), Rat(-1));
    HLine aux2(Rat(1), Rat(1), Rat(-5));
    for (const HLine& aux : {aux1, aux2}) {
        Rat chi = cross_ratio_points(meet(l0, aux), meet(l1, aux), meet(l2, aux), meet(l3, aux));
        EXPECT_EQ(chi, Rat(1, 4));
    }
}

TEST(CrossRatio, ProjectiveInvariance) {
    SplitMix64 rng(13);
    int done = 0;
    while (done < 60) {
        // four distinct collinear points through two random base points
        HPoint p = rand_point(rng), q = rand_point(rng);
        if (p == q) continue;
        auto comb = [&](long long u, long long v) {
            return HPoint(p.coord(0) * Rat(u) + q.coord(0) * Rat(v),
                          p.coord(1) * Rat(u) + q.coord(1) * Rat(v),
                          p.coord(2) * Rat(u) + q.coord(2) * Rat(v));
        };
        HPoint a = comb(1, 0), b = comb(1, 1), c = comb(1, 2), d = comb(2, 1);
        if (a == c || b == d) continue;
        ProjMap t = rand_map(rng);
        Rat before = cross_ratio_points(a, b, c, d);
        Rat after = cross_ratio_points(t(a), t(b), t(c), t(d));
        EXPECT_EQ(before, after);
        ++done;
    }
}

TEST(CrossRatio, DualInvarianceUnderProjMap) {
    SplitMix64 rng(23);
    int done = 0;
    while (done < 40) {
        HPoint p = rand_point(rng);
        HPoint q1 = rand_point(rng), q2 = rand_point(rng), q3 = rand_point(rng),
               q4 = rand_point(rng);
        try {
            HLine l1 = join(p, q1), l2 = join(p, q2), l3 = join(p, q3), l4 = join(p, q4);
            if (l1 == l3 || l2 == l4) continue;
            ProjMap t = rand_map(rng);
            Rat before = cross_ratio_lines(l1, l2, l3, l4);
            Rat after = cross_ratio_lines(t.apply_to_line(l1), t.apply_to_line(l2),
                                          t.apply_to_line(l3), t.apply_to_line(l4));
            EXPECT_EQ(before, after);
            ++done;
        } catch (const geometry_error&) {
        }
    }
}

TEST(ProjMap, ApplyAndCompose) {
    SplitMix64 rng(17);
    ProjMap id = ProjMap::identity();
    for (int i = 0; i < 50; ++i) {
        HPoint p = rand_point(rng);
        EXPECT_EQ(id(p), p);
        ProjMap s = rand_map(rng), t = rand_map(rng);
        EXPECT_EQ(s(t(p)), s.compose(t)(p));
        EXPECT_EQ(s.inverse()(s(p)), p);
        EXPECT_EQ(s.power(3), s.compose(s).compose(s));
        EXPECT_EQ(s.power(-2), s.inverse().compose(s.inverse()));
    }
}

TEST(ProjMap, LineActionCommutesWithMeet) {
    SplitMix64 rng(19);
    int done = 0;
    while (done < 50) {
        HPoint p = rand_point(rng), q = rand_point(rng), r = rand_point(rng), s = rand_point(rng);
        if (p == q || r == s) continue;
        HLine l = join(p, q), m = join(r, s);
        if (l == m) continue;
        ProjMap t = rand_map(rng);
        EXPECT_EQ(t(meet(l, m)), meet(t.apply_to_line(l), t.apply_to_line(m)));
        EXPECT_TRUE(incident(t(p), t.apply_to_line(l)));
        ++done;
    }
}
