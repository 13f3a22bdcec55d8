#include <gtest/gtest.h>

#include "pentagram/polygon.hpp"
#include "pentagram/verify.hpp"

using namespace pentagram;

TEST(Collapse, Figure8OctagonTwoSteps) {
    TwistedPolygon oct =
        make_axis_aligned({Rat(3), Rat(2), Rat(-3), Rat(-2)}, {Rat(1), Rat(2), Rat(-1), Rat(-2)},
                          std::nullopt, HPoint::affine(Rat(1), Rat(1)));
    // T^1 is a proper octagon; T^2 degenerates (this octagon is centrally
    // symmetric, so the two collapse lines shrink to one point).
    RawPeriod t2 = pentagram_iterate_points(oct, 2);
    EXPECT_TRUE(parity_classes_collinear(t2));
    for (const auto& p : t2.points) EXPECT_EQ(p, t2.points[0]);
    // The central symmetry even puts T^1 on two lines already, which is
    // exactly why T^2 shrinks to one point.
    RawPeriod t1 = pentagram_iterate_points(oct, 1);
    EXPECT_TRUE(parity_classes_collinear(t1));
}

TEST(Collapse, ClosedHexagonAndDecagon) {
    // Random closed axis-aligned 2m-gons collapse after m-2 steps; the
    // vertex-parity y's at that step are exactly -1.
    for (int m : {3, 4, 5}) {
        int found = 0;
        for (std::uint64_t seed = 0; seed < 12 && found < 3; ++seed) {
            SplitMix64 rng(seed * 977 + static_cast<std::uint64_t>(m));
            auto sides = [&](bool) {
                std::vector<Rat> s;
                Rat sum(0);
                for (int i = 0; i + 1 < m; ++i) {
                    long long v = rng.in_range(-6, 6);
                    if (v == 0) v = 3;
                    s.emplace_back(v);
                    sum += Rat(v);
                }
                if (sum.is_zero()) return std::vector<Rat>{};
                s.push_back(-sum);
                return s;
            };
            std::vector<Rat> h = sides(true), v = sides(false);
            if (h.empty() || v.empty()) continue;
            try {
                TwistedPolygon poly = make_axis_aligned(h, v);
                RawPeriod fin = pentagram_iterate_points(poly, m - 2);
                EXPECT_TRUE(parity_classes_collinear(fin)) << "m=" << m << " seed=" << seed;
                try {
                    TwistedPolygon fp = pentagram_iterate(poly, m - 2);
                    std::vector<Rat> y = y_params(fp);
                    for (long long j = 1; j <= static_cast<long long>(y.size()); ++j) {
                        if (j % 2 == m % 2) {
                            EXPECT_EQ(y[static_cast<std::size_t>(j - 1)], Rat(-1))
                                << "m=" << m << " j=" << j;
                        }
                    }
                } catch (const input_error&) {
                    // full degeneration; collinearity already checked
                } catch (const geometry_error&) {
                }
                ++found;
            } catch (const geometry_error&) {
            } catch (const input_error&) {
            }
        }
        EXPECT_GE(found, 2) << "m=" << m;
    }
}

TEST(Collapse, TwistedNeedsOneMoreStep) {
    // Twisted axis-aligned 2m-gons with slope-preserving monodromy collapse
    // after m-1 steps (not m-2).
    SplitMix64 rng(31337);
    int found = 0;
    for (int attempt = 0; attempt < 20 && found < 3; ++attempt) {
        std::vector<Rat> h, v;
        for (int i = 0; i < 3; ++i) {
            long long a = rng.in_range(-5, 5);
            long long b = rng.in_range(-5, 5);
            h.emplace_back(a == 0 ? 2 : a);
            v.emplace_back(b == 0 ? -2 : b);
        }
        try {
            TwistedPolygon hex = make_axis_aligned(h, v, Rat(2));
            RawPeriod after2 = pentagram_iterate_points(hex, 2);
            EXPECT_TRUE(parity_classes_collinear(after2));
            RawPeriod after1 = pentagram_iterate_points(hex, 1);
            EXPECT_FALSE(parity_classes_collinear(after1));
            ++found;
        } catch (const geometry_error&) {
        } catch (const input_error&) {
        }
    }
    EXPECT_GE(found, 2);
}

TEST(Collapse, VerifyCommandsPass) {
    VerificationReport closed = verify_collapse(true, 4, 3, 99);
    EXPECT_TRUE(closed.all_passed()) << closed.to_text();
    VerificationReport twisted = verify_collapse(false, 3, 3, 99);
    EXPECT_TRUE(twisted.all_passed()) << twisted.to_text();
}
