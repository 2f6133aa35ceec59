#include <gtest/gtest.h>

#include "homring/homring.hpp"
#include "oracle.hpp"

using namespace homring;

namespace {

CodeGraph complete(std::size_t n) {
    CodeGraph g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

std::vector<std::vector<bool>> adjacency(const CodeGraph& g) {
    std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count()));
    for (std::size_t a = 0; a < g.vertex_count(); ++a)
        for (std::size_t b = 0; b < g.vertex_count(); ++b) adj[a][b] = g.adjacent(a, b);
    return adj;
}

}  // namespace

TEST(TwoWeightGraph, Z5Cube) {
    const auto R = make_integer_ring(5);
    const auto code = build_code(identity_trace(R), power_map(R, 3));
    const auto g = two_weight_graph(code, hamming_table(R));
    EXPECT_EQ(g.vertex_count(), 25u);
    EXPECT_EQ(g.w1, 2);
    for (std::size_t v = 0; v < 25; ++v) ASSERT_EQ(g.degree(v), 8u);

    const auto srg = srg_check(g);
    ASSERT_TRUE(srg.ok()) << srg.violation;
    const auto [lambda, mu] = oracle::srg_lambda_mu(adjacency(g));
    EXPECT_EQ(srg.params->v, 25u);
    EXPECT_EQ(srg.params->k, 8u);
    EXPECT_EQ(static_cast<long>(srg.params->lambda), lambda);
    EXPECT_EQ(static_cast<long>(srg.params->mu), mu);
    const auto& p = *srg.params;
    EXPECT_EQ(p.k * (p.k - p.lambda - 1), (p.v - p.k - 1) * p.mu);
    EXPECT_EQ(connected_components(g).count(), 1u);
}

TEST(TwoWeightGraph, FrankGr42) {
    const auto G = make_galois_ring(2, 2, 2);
    const auto code = build_code(identity_trace(G), frank_map(G));
    const auto g = two_weight_graph(code, hom_weight_axiomatic(G));
    EXPECT_EQ(g.vertex_count(), 64u);
    for (std::size_t v = 0; v < 64; ++v) ASSERT_EQ(g.degree(v), 12u);
}

TEST(TwoWeightGraph, ThreeWeightsRejected) {
    const auto G = make_galois_ring(2, 2, 2);
    const auto S = make_integer_ring(4);
    const auto code = build_code(galois_trace(G, S), frank_map(G));
    try {
        two_weight_graph(code, hom_weight_axiomatic(S));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotTwoWeight);
        EXPECT_NE(std::string(e.what()).find("3 distinct"), std::string::npos);
    }
}

TEST(TwoWeightGraph, AdjacencyIsTranslationInvariant) {
    const auto R = make_integer_ring(7);
    const auto code = build_code(identity_trace(R), power_map(R, 4));
    const auto g = two_weight_graph(code, hamming_table(R));
    auto index = [&](const Codeword& c) {
        return static_cast<std::size_t>(std::lower_bound(code.codewords.begin(), code.codewords.end(), c) -
                                        code.codewords.begin());
    };
    auto shift = [&](const Codeword& x, const Codeword& c) {
        Codeword s(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) s[i] = R->add(x[i], c[i]);
        return s;
    };
    for (std::size_t ci = 0; ci < code.size(); ci += 3)
        for (std::size_t a = 0; a < code.size(); a += 2)
            for (std::size_t b = 0; b < code.size(); b += 5) {
                const std::size_t a2 = index(shift(code.codewords[a], code.codewords[ci]));
                const std::size_t b2 = index(shift(code.codewords[b], code.codewords[ci]));
                ASSERT_EQ(g.adjacent(a, b), g.adjacent(a2, b2));
            }
}

TEST(Srg, CompleteGraphIsDegenerate) {
    const auto srg = srg_check(complete(4));
    ASSERT_TRUE(srg.ok());
    EXPECT_TRUE(srg.degenerate);
    EXPECT_EQ(srg.params->v, 4u);
    EXPECT_EQ(srg.params->k, 3u);
    EXPECT_EQ(srg.params->lambda, 2u);
    EXPECT_EQ(srg.params->mu, 0u);
}

TEST(Srg, PetersenGraph) {
    CodeGraph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    const auto srg = srg_check(g);
    ASSERT_TRUE(srg.ok());
    EXPECT_FALSE(srg.degenerate);
    EXPECT_EQ(srg.params->k, 3u);
    EXPECT_EQ(srg.params->lambda, 0u);
    EXPECT_EQ(srg.params->mu, 1u);
}

TEST(Srg, PathIsNotRegular) {
    CodeGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    const auto srg = srg_check(g);
    EXPECT_FALSE(srg.ok());
    EXPECT_NE(srg.violation.find("not regular"), std::string::npos);
}

TEST(Srg, Z2pGraphsAreDisconnected) {
    for (auto [p, d] : {std::pair{5, 3}, std::pair{7, 4}, std::pair{7, 3}}) {
        const auto R = make_integer_ring(2 * p);
        const auto f = power_map(R, d);
        const auto code = build_code(identity_trace(R), f);
        const auto g = two_weight_graph(code, hom_weight_axiomatic(R));
        EXPECT_GT(connected_components(g).count(), 1u) << p << " " << d;
        EXPECT_FALSE(is_modular(*R, generator_columns(f)).is_modular) << p << " " << d;
    }
}

TEST(Components, EdgelessGraph) {
    const auto c = connected_components(CodeGraph(6));
    EXPECT_EQ(c.count(), 6u);
    EXPECT_EQ(c.sizes, std::vector<std::size_t>(6, 1));
}

TEST(Components, LoopsRejected) {
    CodeGraph g(2);
    EXPECT_THROW(g.add_edge(1, 1), Error);
}

TEST(Modular, Z5Cube) {
    const auto R = make_integer_ring(5);
    const auto m = is_modular(*R, generator_columns(power_map(R, 3)));
    EXPECT_TRUE(m.is_modular);
    ASSERT_TRUE(m.r.has_value());
    // Columns x and -x span the same module; unit orbits have size 4.
    EXPECT_EQ(*m.r, Rational(1, 2));
}

TEST(Modular, RepeatedColumn) {
    const auto R = make_integer_ring(4);
    const std::vector<std::vector<Elem>> cols(5, std::vector<Elem>{1, 2});
    const auto m = is_modular(*R, cols);
    EXPECT_TRUE(m.is_modular);
    EXPECT_EQ(*m.r, Rational(5, 2));
}

TEST(Modular, ZpPowerFamilyIsStronglyRegular) {
    for (std::int64_t p : {5, 7, 11}) {
        const auto R = make_integer_ring(p);
        for (std::int64_t d = 2; d < p; ++d) {
            const auto f = power_map(R, d);
            const auto code = build_code(identity_trace(R), f);
            if (distinct_weights(code, hamming_table(R)).size() != 3) continue;
            if (!is_modular(*R, generator_columns(f)).is_modular) continue;
            const auto srg = srg_check(two_weight_graph(code, hamming_table(R)));
            ASSERT_TRUE(srg.ok()) << p << " " << d << ": " << srg.violation;
            const auto& s = *srg.params;
            EXPECT_EQ(s.k * (s.k - s.lambda - 1), (s.v - s.k - 1) * s.mu);
        }
    }
}
