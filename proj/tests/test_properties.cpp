// Randomised property checks. Each property draws cases from a seeded
// generator so failures are reproducible from the printed seed.

#include <gtest/gtest.h>

#include <random>

#include "homring/homring.hpp"

using namespace homring;

namespace {

constexpr int kCases = 200;

const std::vector<RingPtr>& rings() {
    static const std::vector<RingPtr> all = [] {
        std::vector<RingPtr> v;
        for (int m : {4, 5, 6, 7, 8, 9, 10, 14}) v.push_back(make_integer_ring(m));
        v.push_back(make_galois_ring(2, 1, 2));
        v.push_back(make_galois_ring(2, 1, 3));
        v.push_back(make_galois_ring(2, 2, 2));
        v.push_back(make_galois_ring(3, 2, 2));
        v.push_back(make_galois_ring(2, 3, 2));
        v.push_back(make_table_ring("FXY:2"));
        v.push_back(make_table_ring("FXY:3"));
        v.push_back(make_table_ring("Z4X"));
        return v;
    }();
    return all;
}

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    const RingPtr& ring() { return rings()[rng() % rings().size()]; }
    Elem elem(const Ring& R) { return static_cast<Elem>(rng() % R.order()); }
    Elem unit(const Ring& R) { return R.units()[rng() % R.units().size()]; }
};

}  // namespace

TEST(Property, RingAxiomsOnRandomTriples) {
    Gen g(1);
    for (int i = 0; i < kCases * 10; ++i) {
        const Ring& R = *g.ring();
        const Elem a = g.elem(R), b = g.elem(R), c = g.elem(R);
        ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c))) << R.spec();
        ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c))) << R.spec();
        ASSERT_EQ(R.add(a, R.neg(a)), R.zero());
    }
}

TEST(Property, UnitsHaveInverses) {
    Gen g(2);
    for (int i = 0; i < kCases; ++i) {
        const Ring& R = *g.ring();
        const Elem u = g.unit(R);
        ASSERT_EQ(R.mul(u, R.inverse(u)), R.one());
    }
}

TEST(Property, WeightIsUnitInvariant) {
    Gen g(3);
    for (int i = 0; i < kCases; ++i) {
        const auto& R = g.ring();
        const auto wt = hom_weight_axiomatic(R);
        const Elem x = g.elem(*R), u = g.unit(*R);
        ASSERT_EQ(wt(R->mul(x, u)), wt(x)) << R->spec();
    }
}

TEST(Property, AutomorphismsAreHomomorphisms) {
    Gen g(4);
    std::vector<Automorphism> autos;
    for (const auto& R : rings()) {
        if (R->galois()) autos.push_back(frobenius(R));
        if (R->spec().starts_with("FXY")) autos.push_back(swap_xy(R));
        if (R->spec() == "Z4X") autos.push_back(conjugation(R));
    }
    for (int i = 0; i < kCases; ++i) {
        const auto& s = autos[g.rng() % autos.size()];
        const Ring& R = *s.ring;
        const Elem a = g.elem(R), b = g.elem(R);
        ASSERT_EQ(s(R.mul(a, b)), R.mul(s(a), s(b)));
        ASSERT_EQ(s(R.add(a, b)), R.add(s(a), s(b)));
    }
}

TEST(Property, TracesAreSubringLinear) {
    Gen g(5);
    std::vector<TraceMap> traces;
    for (const auto& R : rings()) traces.push_back(default_absolute_trace(R));
    for (int i = 0; i < kCases * 5; ++i) {
        const auto& T = traces[g.rng() % traces.size()];
        const Ring& R = *T.source;
        const Ring& S = *T.target;
        const Elem a = g.elem(R), b = g.elem(R), s = g.elem(S);
        ASSERT_EQ(T(R.add(a, b)), S.add(T(a), T(b)));
        ASSERT_EQ(T(R.mul(T.embedding[s], a)), S.mul(s, T(a)));
    }
}

TEST(Property, TransformRoutesAgree) {
    Gen g(6);
    for (int i = 0; i < kCases; ++i) {
        const auto& R = g.ring();
        if (R->order() > 64) continue;
        const auto T = default_absolute_trace(R);
        const Transform W(T, power_map(R, 2 + static_cast<std::int64_t>(g.rng() % 3)));
        const Elem a = g.elem(*R), b = g.elem(*R);
        ASSERT_EQ(W.via_characters(a, b), W.via_weight(a, b)) << R->spec();
    }
}

TEST(Property, CodeIsClosedUnderAddition) {
    Gen g(7);
    for (int i = 0; i < 30; ++i) {
        const auto& R = g.ring();
        if (R->order() > 27) continue;
        const auto T = default_absolute_trace(R);
        const auto code = build_code(T, power_map(R, 3));
        const Ring& S = *T.target;
        for (int j = 0; j < 20; ++j) {
            const auto& x = code.codewords[g.rng() % code.size()];
            const auto& y = code.codewords[g.rng() % code.size()];
            Codeword s(x.size());
            for (std::size_t k = 0; k < s.size(); ++k) s[k] = S.add(x[k], y[k]);
            ASSERT_TRUE(code.contains(s)) << R->spec();
        }
    }
}

TEST(Property, RandomFrankPermutationsKeepTheEnumerator) {
    const auto R = make_galois_ring(3, 2, 2);
    const auto S = make_integer_ring(9);
    const auto T = galois_trace(R, S);
    const auto wt = hom_weight_axiomatic(S);
    const auto want = frank_subring_enumerator(3, 2);
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        const auto f = frank_map(R, random_teichmuller_permutation(9, seed));
        ASSERT_EQ(weight_enumerator(build_code(T, f), wt).counts, want.counts) << "seed " << seed;
    }
}
