#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "pentagram/asm_matrix.hpp"
#include "pentagram/fpoly_routes.hpp"
#include "pentagram/poset.hpp"

using namespace pentagram;

TEST(Poset, SmallGoldenSets) {
    // Q_2 = {(0,0,0)}, Q_1 empty, hence P_1 = {(0,0,0)}.
    EXPECT_EQ(q_elements(1).size(), 0u);
    ASSERT_EQ(q_elements(2).size(), 1u);
    EXPECT_EQ(q_elements(2)[0], (PosetElem{0, 0, 0}));
    EXPECT_EQ(build_P(1).size(), 1);

    // Q_3 = {(0,+-1,1), (+-1,0,-1)}.
    std::vector<PosetElem> q3 = q_elements(3);
    std::vector<PosetElem> expect{{-1, 0, -1}, {1, 0, -1}, {0, -1, 1}, {0, 1, 1}};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(q3, expect);

    EXPECT_EQ(build_P(2).size(), 5);
    EXPECT_EQ(build_P(3).size(), 14);
}

TEST(Poset, P2HasseDiagram) {
    // P_2: (0,0,0) covers (+-1,0,-1) and is covered by (0,+-1,1).
    Poset p2 = build_P(2);
    int mid = p2.index_of({0, 0, 0});
    int bl = p2.index_of({-1, 0, -1}), br = p2.index_of({1, 0, -1});
    int tl = p2.index_of({0, -1, 1}), tr = p2.index_of({0, 1, 1});
    ASSERT_TRUE(mid >= 0 && bl >= 0 && br >= 0 && tl >= 0 && tr >= 0);
    EXPECT_TRUE(p2.less(bl, mid));
    EXPECT_TRUE(p2.less(br, mid));
    EXPECT_TRUE(p2.less(mid, tl));
    EXPECT_TRUE(p2.less(mid, tr));
    EXPECT_TRUE(p2.less(bl, tr)); // transitivity
    EXPECT_FALSE(p2.less(bl, br));
    EXPECT_FALSE(p2.less(tl, tr));
}

TEST(Poset, FiberSizes) {
    // For each admissible (r,s) there are (k-|r|-|s|)/2 elements, 4 apart
    // in t.
    for (int k = 2; k <= 7; ++k) {
        std::vector<PosetElem> q = q_elements(k);
        std::map<std::pair<int, int>, std::vector<int>> fibers;
        for (const auto& e : q) fibers[{e.r, e.s}].push_back(e.t);
        for (auto& [rs, ts] : fibers) {
            auto [r, s] = rs;
            EXPECT_EQ(static_cast<int>(ts.size()), (k - std::abs(r) - std::abs(s)) / 2);
            EXPECT_EQ((std::abs(r) + std::abs(s) + k) % 2, 0);
            std::sort(ts.begin(), ts.end());
            for (std::size_t i = 1; i < ts.size(); ++i) EXPECT_EQ(ts[i] - ts[i - 1], 4);
        }
    }
}

TEST(Poset, InducedOrderConsistent) {
    // Q_k sits inside both P_{k-1} and P_k; the induced orders agree.
    for (int k = 2; k <= 6; ++k) {
        Poset from_pk = build_Q(k);
        Poset from_pkm1 = build_P(k - 1).restricted_to(q_elements(k));
        ASSERT_EQ(from_pk.size(), from_pkm1.size());
        for (int i = 0; i < from_pk.size(); ++i)
            for (int j = 0; j < from_pk.size(); ++j)
                EXPECT_EQ(from_pk.less(i, j), from_pkm1.less(i, j));
    }
}

TEST(Ideals, CountsAndClosure) {
    EXPECT_EQ(enumerate_ideal_masks(build_P(1)).size(), 2u);
    EXPECT_EQ(enumerate_ideal_masks(build_P(2)).size(), 8u);
    EXPECT_EQ(enumerate_ideal_masks(build_Q(3)).size(), 7u);
    Poset p3 = build_P(3);
    std::vector<Bits> masks = enumerate_ideal_masks(p3);
    EXPECT_EQ(masks.size(), 64u); // 2^{k(k+1)/2} for k = 3
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& m : masks) {
        EXPECT_TRUE(p3.is_ideal(m));
        EXPECT_TRUE(seen.insert(m.w).second); // duplicate-free
    }
    // deterministic order
    std::vector<Bits> again = enumerate_ideal_masks(p3);
    for (std::size_t i = 0; i < masks.size(); ++i) EXPECT_EQ(masks[i], again[i]);
}

TEST(Asm, InvariantsAndEnumeration) {
    EXPECT_TRUE(is_asm(AsmMatrix::identity(3)));
    AsmMatrix central(3);
    central.at(0, 1) = 1;
    central.at(1, 0) = 1;
    central.at(1, 1) = -1;
    central.at(1, 2) = 1;
    central.at(2, 1) = 1;
    EXPECT_TRUE(is_asm(central));
    AsmMatrix bad = AsmMatrix::identity(3);
    bad.at(0, 1) = 1; // row sum 2
    EXPECT_FALSE(is_asm(bad));
    std::vector<std::size_t> expect{1, 2, 7, 42, 429};
    for (int k = 1; k <= 5; ++k) {
        std::vector<AsmMatrix> all = enumerate_asm(k);
        EXPECT_EQ(all.size(), expect[static_cast<std::size_t>(k - 1)]);
        for (const auto& m : all) EXPECT_TRUE(is_asm(m));
    }
}

TEST(Bijection, TableGoldens) {
    // empty ideal <-> identity matrix
    EXPECT_EQ(ideal_to_asm(std::vector<PosetElem>{}, 3), AsmMatrix::identity(3));
    EXPECT_TRUE(asm_to_ideal(AsmMatrix::identity(3)).empty());

    // {(-1,0,-1), (1,0,-1)} <-> the central -1 matrix
    std::vector<PosetElem> pair{{-1, 0, -1}, {1, 0, -1}};
    AsmMatrix central = AsmMatrix::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
    EXPECT_EQ(ideal_to_asm(pair, 3), central);
    EXPECT_EQ(asm_to_ideal(central), pair);

    // full ideal <-> the anti-identity permutation
    AsmMatrix anti = AsmMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    EXPECT_EQ(ideal_to_asm(q_elements(3), 3), anti);

    EXPECT_THROW(asm_to_ideal(AsmMatrix(3)), input_error); // zero matrix is not an ASM
}

TEST(Bijection, ExhaustiveRoundTrip) {
    for (int k = 1; k <= 4; ++k) {
        Poset qk = build_Q(k);
        std::vector<Bits> ideals = enumerate_ideal_masks(qk);
        std::vector<AsmMatrix> asms = enumerate_asm(k);
        ASSERT_EQ(ideals.size(), asms.size()) << "k=" << k;
        std::set<AsmMatrix> images;
        for (const auto& mask : ideals) {
            AsmMatrix m = ideal_to_asm(qk, mask, k);
            EXPECT_TRUE(is_asm(m));
            EXPECT_TRUE(images.insert(m).second); // injective
            EXPECT_EQ(asm_to_ideal_mask(qk, m), mask); // two-sided inverse
        }
        for (const auto& m : asms) EXPECT_TRUE(images.count(m)); // surjective
    }
}

TEST(Compatibility, WorkedExamples) {
    // ASM(2) has the two permutation matrices.
    AsmMatrix id2 = AsmMatrix::identity(2);
    AsmMatrix swap2 = AsmMatrix::from_rows({{0, 1}, {1, 0}});
    // The three "top row" elements of ASM(3) pair only with the identity.
    for (auto rows : {std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                      std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
                      std::vector<std::vector<int>>{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}) {
        AsmMatrix a = AsmMatrix::from_rows(rows);
        EXPECT_TRUE(compatible_asm(a, id2));
        EXPECT_FALSE(compatible_asm(a, swap2));
    }
    // The central -1 element pairs with both.
    AsmMatrix central = AsmMatrix::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
    EXPECT_TRUE(compatible_asm(central, id2));
    EXPECT_TRUE(compatible_asm(central, swap2));
    // Empty ideals are always compatible.
    EXPECT_TRUE(compatible_ideals({}, {}, 2));
}

TEST(Compatibility, TransportAndPairCounts) {
    for (int k = 1; k <= 3; ++k) {
        AsmPairTables tables(k);
        // |J(P_k)| equals the number of compatible pairs.
        EXPECT_EQ(enumerate_ideal_masks(tables.p).size(), tables.pairs.size());
        // compatibility of ideals transports to compatibility of matrices
        std::set<std::pair<int, int>> pairset(tables.pairs.begin(), tables.pairs.end());
        for (int i = 0; i < static_cast<int>(tables.asm_upper.size()); ++i)
            for (int j = 0; j < static_cast<int>(tables.asm_lower.size()); ++j) {
                bool via_asm = compatible_asm(tables.asm_upper[static_cast<std::size_t>(i)],
                                              tables.asm_lower[static_cast<std::size_t>(j)]);
                EXPECT_EQ(via_asm, pairset.count({i, j}) > 0);
            }
        // every ideal of P_k splits into a compatible pair with
        // multiplicative weight
        for (const auto& mask : enumerate_ideal_masks(tables.p)) {
            std::vector<PosetElem> upper, lower;
            for (const auto& e : tables.p.members(mask))
                (in_Q(k + 1, e.r, e.s, e.t) ? upper : lower).push_back(e);
            EXPECT_TRUE(compatible_ideals(upper, lower, k));
            LMonomial w_all = ideal_weight(16, tables.p.members(mask), 0);
            EXPECT_EQ(w_all, mono_mul(ideal_weight(16, upper, 0), ideal_weight(16, lower, 0)));
        }
    }
}
