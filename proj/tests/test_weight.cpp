#include <gtest/gtest.h>

#include "homring/homring.hpp"
#include "oracle.hpp"

using namespace homring;

namespace {

std::vector<Rational> rats(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST(HomWeight, Z4IsLee) {
    const auto R = make_integer_ring(4);
    EXPECT_EQ(hom_weight_axiomatic(R).table, rats({0, 1, 2, 1}));
    EXPECT_EQ(hom_weight_from_character(default_character(R)).table, rats({0, 1, 2, 1}));
}

TEST(HomWeight, Gf3HammingAtTwoThirds) {
    const auto R = make_integer_ring(3);
    EXPECT_EQ(hom_weight_axiomatic(R, Rational(2, 3)).table, rats({0, 1, 1}));
}

TEST(HomWeight, Z6) {
    const auto R = make_integer_ring(6);
    const auto want = rats({0, Rational(1, 2), Rational(3, 2), 2, Rational(3, 2), Rational(1, 2)});
    EXPECT_EQ(hom_weight_axiomatic(R).table, want);
    EXPECT_EQ(hom_weight_from_character(default_character(R)).table, want);
}

TEST(HomWeight, ZmMatchesRamanujanOracle) {
    for (std::int64_t m : {2, 4, 5, 6, 8, 9, 10, 12, 14, 15, 30}) {
        const auto R = make_integer_ring(m);
        const auto wt = hom_weight_axiomatic(R);
        for (std::int64_t x = 0; x < m; ++x) ASSERT_EQ(wt(R->from_int(x)), oracle::zm_weight(m, x)) << m << " " << x;
    }
}

TEST(HomWeight, ScalesWithGamma) {
    const auto R = make_table_ring("FXY:2");
    const auto one = hom_weight_axiomatic(R);
    const auto half = hom_weight_axiomatic(R, Rational(1, 2));
    for (Elem a = 0; a < R->order(); ++a) ASSERT_EQ(half(a) * 2, one(a));
}

TEST(HomWeight, SocleValueOnLocalRings) {
    // On a local ring with residue field of size q, w = q/(q-1) on soc \ {0}.
    for (auto R : {make_integer_ring(9), make_galois_ring(2, 3, 2), make_table_ring("FXY:3"), make_table_ring("Z4X")}) {
        const auto q = static_cast<std::int64_t>(R->order() / R->radical().size());
        const auto wt = hom_weight_axiomatic(R);
        for (Elem s : R->socle().elements) {
            if (s == 0) continue;
            ASSERT_EQ(wt(s), Rational(q, q - 1)) << R->spec();
        }
    }
}

TEST(HomWeight, BothRoutesAgreeEverywhere) {
    for (auto R : {make_galois_ring(2, 2, 2), make_galois_ring(3, 2, 2), make_galois_ring(2, 3, 2),
                   make_table_ring("FXY:2"), make_table_ring("FXY:3"), make_table_ring("Z4X"),
                   make_galois_ring(2, 1, 3)}) {
        for (const Rational& g : {Rational(1), Rational(2, 3)})
            EXPECT_EQ(hom_weight_axiomatic(R, g).table, hom_weight_from_character(default_character(R), g).table)
                << R->spec();
    }
}

TEST(Validate, CharacterTableOnGr42) {
    const auto R = make_galois_ring(2, 2, 2);
    EXPECT_TRUE(validate_weight(hom_weight_from_character(default_character(R))).ok());
}

TEST(Validate, HammingOnZ4Fails) {
    const auto R = make_integer_ring(4);
    WeightTable wt = hamming_table(R);
    wt.gamma = Rational(1, 2);
    const auto rep = validate_weight(wt);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.violations.front().axiom, "orbit-sum");
    // {0, 2} sums to 1 = gamma * 2; the full ring sums to 3, not 2.
    EXPECT_EQ(rep.violations.front().witness, "x = 1: sum over Rx is 3, expected 2");
}

TEST(Validate, HammingOnZ4FailsForEveryGamma) {
    // Orbit sums 1 over {0,2} and 3 over Z_4 need gamma = 1/2 and gamma = 3/4 at once.
    const auto R = make_integer_ring(4);
    for (const Rational& g : {Rational(1, 2), Rational(3, 4), Rational(1)}) {
        WeightTable wt = hamming_table(R);
        wt.gamma = g;
        EXPECT_FALSE(validate_weight(wt).ok());
    }
}

TEST(Validate, ZeroTable) {
    const auto R = make_integer_ring(5);
    WeightTable wt{R, Rational(1), std::vector<Rational>(5, Rational(0))};
    EXPECT_FALSE(validate_weight(wt).ok());
}

TEST(Validate, ClassAxiom) {
    const auto R = make_integer_ring(5);
    auto wt = hom_weight_axiomatic(R);
    wt.table[1] += 1;
    wt.table[2] -= 1;
    const auto rep = validate_weight(wt);
    ASSERT_FALSE(rep.ok());
    EXPECT_EQ(rep.violations.front().axiom, "class");
}

TEST(Hamming, FieldsAreHomogeneous) {
    const auto R = make_integer_ring(5);
    const auto h = hamming_table(R);
    EXPECT_EQ(h.gamma, Rational(4, 5));
    EXPECT_EQ(h.table, hom_weight_axiomatic(R, Rational(4, 5)).table);
    EXPECT_EQ(h(0), 0);
    EXPECT_EQ(hamming_normalized_gamma(*make_galois_ring(2, 1, 2)), Rational(3, 4));
}

TEST(CyclicSubmodules, Z6) {
    const auto cs = cyclic_submodules(*make_integer_ring(6));
    ASSERT_EQ(cs.ideals.size(), 4u);
    EXPECT_EQ(cs.ideals.front().size(), 1u);
    EXPECT_EQ(cs.ideals.back().size(), 6u);
    EXPECT_EQ(cs.class_of[2], cs.class_of[4]);
    EXPECT_NE(cs.class_of[1], cs.class_of[3]);
}

TEST(WeightCache, ReturnsSameTable) {
    WeightCache cache;
    const auto R = make_integer_ring(9);
    const auto& a = cache.get(R, Rational(1));
    const auto& b = cache.get(R, Rational(1));
    EXPECT_EQ(&a, &b);
    EXPECT_EQ(a.table, hom_weight_axiomatic(R).table);
}
