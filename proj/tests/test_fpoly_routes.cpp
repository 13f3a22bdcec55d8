#include <gtest/gtest.h>

#include "pentagram/cluster.hpp"
#include "pentagram/fpoly_routes.hpp"
#include "pentagram/rng.hpp"

using namespace pentagram;

namespace {
constexpr int W = 16; // ring width for n = 8

LMonomial mono(std::initializer_list<long long> vars) {
    LMonomial m(W);
    for (long long v : vars) m.mul_var(v, 1);
    return m;
}
} // namespace

TEST(MonomialArray, Figure9Goldens) {
    EXPECT_EQ(m_monomial_0(W, -1, 1), mono({-3}));
    EXPECT_EQ(m_monomial_0(W, 0, 1), mono({0}));
    EXPECT_EQ(m_monomial_0(W, 1, 1), mono({3}));
    EXPECT_EQ(m_monomial_0(W, 0, 2), mono({-3, 1, 3}));
    EXPECT_EQ(m_monomial_0(W, -1, 2), mono({-6, -2, 0}));
    EXPECT_EQ(m_monomial_0(W, 0, 3), mono({-6, -2, 0, 2, 4, 6}));
    EXPECT_EQ(m_monomial_0(W, 0, -2), mono({-1}));
    EXPECT_EQ(m_monomial_0(W, -1, -2), mono({-4}));
    EXPECT_EQ(m_monomial_0(W, -1, -3), mono({-7, -5, -1}));
    EXPECT_EQ(m_monomial_0(W, 1, -3), mono({-1, 1, 5}));
    for (long long i = -3; i <= 3; ++i) {
        EXPECT_TRUE(m_monomial_0(W, i, 0).is_one());
        EXPECT_TRUE(m_monomial_0(W, i, -1).is_one());
    }
}

TEST(MonomialArray, CenterColumnIsTrivial) {
    MTable mt(W);
    for (long long i = -3; i <= 3; ++i)
        for (int k = -1; k <= 5; ++k) EXPECT_TRUE(mt.at(i, 0, k).is_one());
    // consequence at k = 1 (from m_{i,j,1} = m_{i-1,j,0} m_{i+1,j,0} / m_{i,j,-1}
    // and m_{i,j,-1} = 1/m_{i,j,0}):
    for (long long i = -2; i <= 2; ++i)
        for (long long j = -2; j <= 2; ++j) {
            LMonomial lhs = mono_mul(mt.at(i, j, 1), mt.at(i, j, -1));
            EXPECT_EQ(lhs, mono_mul(mt.at(i - 1, j, 0), mt.at(i + 1, j, 0)));
            EXPECT_EQ(mt.at(i, j, 1),
                      mono_mul(mono_mul(mt.at(i - 1, j, 0), mt.at(i + 1, j, 0)), mt.at(i, j, 0)));
        }
}

TEST(MonomialArray, QuotientIdentity) {
    MTable mt(W);
    YPattern yp(8);
    for (long long i = -2; i <= 2; ++i)
        for (long long j = -2; j <= 2; ++j)
            for (int k = -1; k <= 4; ++k) {
                LMonomial lhs = mono_div(mono_mul(mt.at(i, j - 1, k), mt.at(i, j + 1, k)),
                                         mono_mul(mt.at(i - 1, j, k), mt.at(i + 1, j, k)));
                EXPECT_EQ(lhs, yp.M(3 * i + j, k)) << "i=" << i << " j=" << j << " k=" << k;
            }
}

TEST(XMatrices, WorkedK2Example) {
    MTable mt(W);
    // X_2 = [[1, y0], [1, 1]]
    EXPECT_TRUE(x_matrix_entry(mt, 2, 0, 0, 0).is_one());
    EXPECT_EQ(x_matrix_entry(mt, 2, 0, 1, 0), mono({0}));
    EXPECT_TRUE(x_matrix_entry(mt, 2, 1, 0, 0).is_one());
    EXPECT_TRUE(x_matrix_entry(mt, 2, 1, 1, 0).is_one());
    // X_3 = [[1, y-3, y-3 y1 y3], [1, 1, y3], [y-1, 1, 1]]
    EXPECT_EQ(x_matrix_entry(mt, 3, 0, 1, 0), mono({-3}));
    EXPECT_EQ(x_matrix_entry(mt, 3, 0, 2, 0), mono({-3, 1, 3}));
    EXPECT_EQ(x_matrix_entry(mt, 3, 1, 2, 0), mono({3}));
    EXPECT_EQ(x_matrix_entry(mt, 3, 2, 0, 0), mono({-1}));
    EXPECT_TRUE(x_matrix_entry(mt, 3, 1, 0, 0).is_one());
    EXPECT_TRUE(x_matrix_entry(mt, 3, 2, 2, 0).is_one());
}

TEST(AsmRoute, Asm3MonomialList) {
    // The seven ASM(3) monomials: 1, y-3, y3, y-3 y3, then y-3 y3 times
    // y-1, y1, and y-1 y1.
    MTable mt(W);
    AsmPairTables tables(2);
    std::multiset<std::string> got;
    for (const auto& a : tables.asm_upper) {
        LMonomial acc(W);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (int e = a.at(r, c); e != 0)
                    acc = mono_mul(acc, x_matrix_entry(mt, 3, r, c, 0).pow(e));
        got.insert(acc.str());
    }
    std::multiset<std::string> expect{mono({}).str(),           mono({-3}).str(),
                                      mono({3}).str(),          mono({-3, 3}).str(),
                                      mono({-3, 3, -1}).str(),  mono({-3, 3, 1}).str(),
                                      mono({-3, 3, -1, 1}).str()};
    EXPECT_EQ(got, expect);
}

TEST(AsmRoute, WeightEqualsMatrixMonomial) {
    // wt(I) = X_k^A for the ideal attached to each ASM, over ASM(3) and
    // ASM(4).
    for (int k : {3, 4}) {
        MTable mt(W);
        Poset qk = build_Q(k);
        for (const auto& a : enumerate_asm(k)) {
            LMonomial viam(W);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    if (int e = a.at(r, c); e != 0)
                        viam = mono_mul(viam, x_matrix_entry(mt, k, r, c, 0).pow(e));
            std::vector<PosetElem> ideal = qk.members(asm_to_ideal_mask(qk, a));
            EXPECT_EQ(viam, ideal_weight(W, ideal, 0)) << "k=" << k;
        }
    }
}

TEST(Routes, IdealSumK1K2) {
    YPattern yp(8);
    // k = 1: P_1 = {(0,0,0)}, two ideals, F = 1 + y_j.
    for (long long j : {0LL, 4LL}) EXPECT_EQ(f_ideals(W, j, 1), LPoly::one_plus_var(W, j));
    // k = 2: the eight ideals regroup into the displayed two-term form.
    for (long long j : {0LL, 1LL}) {
        LPoly expect = LPoly::one_plus_var(W, j - 3) * LPoly::one_plus_var(W, j + 3) +
                       LPoly::var(W, j - 3) * LPoly::var(W, j) * LPoly::var(W, j + 3) *
                           LPoly::one_plus_var(W, j - 1) * LPoly::one_plus_var(W, j + 1);
        EXPECT_EQ(f_ideals(W, j, 2), expect);
        EXPECT_EQ(yp.F(j, 2), expect);
    }
}

TEST(Routes, TripleEqualitySmallK) {
    // Full-depth route equality runs in the acceptance suite; here k <= 3.
    YPattern yp(8);
    for (int k = 1; k <= 3; ++k) {
        AsmPairTables tables(k);
        Poset pk = build_P(k);
        std::vector<Bits> masks = enumerate_ideal_masks(pk);
        for (long long j = 0; j < W; ++j) {
            LPoly a = yp.F(j, k);
            LPoly b = f_ideals(W, j, pk, masks);
            LPoly c = f_asm(W, j, k, tables);
            EXPECT_EQ(a, b) << "j=" << j << " k=" << k;
            EXPECT_EQ(b, c) << "j=" << j << " k=" << k;
        }
    }
}

TEST(Dodgson, SigmaSigns) {
    for (long long j = -9; j <= 9; ++j) {
        EXPECT_EQ(sigma_sign(j) * sigma_sign(j), 1);
        EXPECT_EQ(sigma_sign(j - 1) * sigma_sign(j + 1), -1);
    }
}

TEST(Dodgson, SmallDeterminants) {
    // k = 1: det [[1, -y0], [1, 1]] = 1 + y0.
    EXPECT_EQ(dodgson_f(W, 0, 1), LPoly::one_plus_var(W, 0));
    // k = 2: the 3x3 determinant equals F(0,2) at y0 = -1 (all even
    // variables specialize, but only y0 appears).
    YPattern yp(8);
    EXPECT_EQ(dodgson_f(W, 0, 2), yp.F(0, 2).specialize_parity(0));
    // k = 3: determinant equals the odd-specialized F(0,3).
    EXPECT_EQ(dodgson_f(W, 0, 3), yp.F(0, 3).specialize_parity(1));
    // shifted variant used by the collapse machinery
    EXPECT_EQ(dodgson_f(W, 1, 2), yp.F(1, 2).specialize_parity(1));
}

TEST(Dodgson, K4AtRandomAssignments) {
    // Symbolic 5x5 expansion is fine, but the acceptance criterion asks for
    // the k = 4 comparison at random rational points of the surviving
    // (odd) variables; mirror that here at a few points.
    YPattern yp(8);
    LPoly det = dodgson_f(W, 0, 4);
    LPoly spec = yp.F(0, 4).specialize_parity(0);
    SplitMix64 rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rat> vals;
        for (int r = 0; r < W; ++r)
            vals.emplace_back(r % 2 == 0 ? Rat(-1) : Rat(rng.in_range(1, 9), rng.in_range(1, 9)));
        auto at = [&](int r) { return vals[static_cast<std::size_t>(r)]; };
        EXPECT_EQ(det.substitute(at), spec.substitute(at));
        EXPECT_EQ(det.substitute(at), yp.F(0, 4).substitute(at));
    }
}

TEST(Collapse, Figure8Determinant) {
    std::vector<Rat> sides{Rat(-2), Rat(3), Rat(1), Rat(2), Rat(2), Rat(-3), Rat(-1), Rat(-2)};
    EXPECT_TRUE(collapse_determinant_closed(sides));
    EXPECT_THROW(collapse_determinant_closed({Rat(1), Rat(1), Rat(1), Rat(1)}), input_error);
}

TEST(Collapse, Figure8SymbolicFVanishes) {
    // F_{j,3} vanishes at the octagon's y-values for every even j.
    std::vector<Rat> sides{Rat(-2), Rat(3), Rat(1), Rat(2), Rat(2), Rat(-3), Rat(-1), Rat(-2)};
    auto y = y_from_sides(sides, Rat(1));
    YPattern yp(8);
    for (long long j = 0; j < 16; j += 2)
        EXPECT_TRUE(yp.F(j, 3).substitute(y).is_zero()) << "j=" << j;
    // (Odd shifts vanish identically under the y_odd = -1 specialization
    // alone; the even shifts are the content of the closed-polygon
    // statement. Side data violating closure keeps them nonzero.)
    std::vector<Rat> generic{Rat(-1), Rat(3), Rat(1), Rat(2), Rat(2), Rat(-4), Rat(-2), Rat(-1)};
    auto yg = y_from_sides(generic, Rat(1));
    for (long long j = 0; j < 16; j += 2)
        EXPECT_TRUE(yp.F(j, 3).substitute(yg).is_zero()) << "j=" << j;
    std::vector<Rat> open{Rat(-1), Rat(3), Rat(1), Rat(2), Rat(2), Rat(-4), Rat(-2), Rat(5)};
    auto yo = y_from_sides(open, Rat(1));
    bool some_nonzero = false;
    for (long long j = 0; j < 16; j += 2)
        if (!yp.F(j, 3).substitute(yo).is_zero()) some_nonzero = true;
    EXPECT_TRUE(some_nonzero);
}

TEST(Collapse, TwistedColumnDependence) {
    // A twisted axis-aligned hexagon with monodromy scale 2.
    std::vector<Rat> sides{Rat(2), Rat(3), Rat(-3), Rat(1), Rat(2), Rat(-1)};
    EXPECT_TRUE(collapse_determinant_twisted(sides, Rat(2)));
    EXPECT_THROW(collapse_determinant_twisted(sides, Rat(0)), input_error);
}
