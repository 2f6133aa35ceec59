#pragma once

/**
 * @file graph.hpp
 * @brief The graph G(C) of a two-weight code, strong regularity, the
 * modular-code property and connected components.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "code.hpp"
#include "rational.hpp"

namespace homring {

inline constexpr std::size_t kMaxGraphVertices = 20'000;

/// Simple undirected graph stored as one bitset row per vertex.
class CodeGraph {
   public:
    explicit CodeGraph(std::size_t n = 0) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t vertex_count() const { return n_; }

    void add_edge(std::size_t a, std::size_t b) {
        require(a != b, ErrorKind::InvalidParameter, "loops are not allowed");
        set(a, b);
        set(b, a);
    }

    bool adjacent(std::size_t a, std::size_t b) const { return (row(a)[b / 64] >> (b % 64)) & 1u; }

    std::size_t degree(std::size_t a) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(a)[w]));
        return d;
    }

    std::size_t common_neighbours(std::size_t a, std::size_t b) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w)
            d += static_cast<std::size_t>(std::popcount(row(a)[w] & row(b)[w]));
        return d;
    }

    std::vector<std::size_t> neighbours(std::size_t a) const {
        std::vector<std::size_t> out;
        for (std::size_t b = 0; b < n_; ++b)
            if (adjacent(a, b)) out.push_back(b);
        return out;
    }

    /// Smaller nonzero weight of the code this graph came from (0 if built by hand).
    Rational w1{0};

   private:
    const std::uint64_t* row(std::size_t a) const { return bits_.data() + a * words_; }
    void set(std::size_t a, std::size_t b) { bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Vertices are the codewords (in code order); x ~ y iff w(x - y) = w1.
inline CodeGraph two_weight_graph(const Code& code, const WeightTable& wt) {
    const auto weights = distinct_weights(code, wt);
    const std::size_t nonzero = weights.size() - (weights.front() == 0 ? 1 : 0);
    if (nonzero != 2)
        fail(ErrorKind::NotTwoWeight, "code has " + std::to_string(nonzero) + " distinct nonzero weights");
    if (code.size() > kMaxGraphVertices)
        fail(ErrorKind::BudgetExceeded, "graph on " + std::to_string(code.size()) + " vertices");
    const Rational w1 = weights[1];

    // Scale weights to integers so that pair weights are exact integer sums.
    BigInt lcm_den = 1;
    for (const auto& w : wt.table) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(w));
    std::vector<std::int64_t> scaled(wt.table.size());
    for (std::size_t s = 0; s < scaled.size(); ++s)
        scaled[s] = static_cast<std::int64_t>(wt.table[s] * Rational(lcm_den));
    const auto target = static_cast<std::int64_t>(w1 * Rational(lcm_den));

    const Ring& S = *code.S();
    CodeGraph g(code.size());
    g.w1 = w1;
    for (std::size_t a = 0; a < code.size(); ++a)
        for (std::size_t b = a + 1; b < code.size(); ++b) {
            std::int64_t w = 0;
            const auto& x = code.codewords[a];
            const auto& y = code.codewords[b];
            for (std::size_t i = 0; i < x.size(); ++i) w += scaled[S.sub(x[i], y[i])];
            if (w == target) g.add_edge(a, b);
        }
    return g;
}

struct SRGParams {
    std::size_t v = 0, k = 0, lambda = 0, mu = 0;
};

struct SRGResult {
    std::optional<SRGParams> params;
    /// Complete or edgeless graph: lambda or mu is vacuous and reported as 0.
    bool degenerate = false;
    std::string violation;

    bool ok() const { return params.has_value(); }
};

inline SRGResult srg_check(const CodeGraph& g) {
    SRGResult res;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        res.violation = "empty graph";
        return res;
    }
    const std::size_t k = g.degree(0);
    for (std::size_t a = 1; a < n; ++a)
        if (g.degree(a) != k) {
            res.violation = "not regular: deg(0) = " + std::to_string(k) + ", deg(" + std::to_string(a) +
                            ") = " + std::to_string(g.degree(a));
            return res;
        }
    std::optional<std::size_t> lambda, mu;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t c = g.common_neighbours(a, b);
            auto& slot = g.adjacent(a, b) ? lambda : mu;
            if (!slot) {
                slot = c;
            } else if (*slot != c) {
                res.violation = std::string(g.adjacent(a, b) ? "lambda" : "mu") + " not constant at (" +
                                std::to_string(a) + "," + std::to_string(b) + "): " + std::to_string(*slot) +
                                " vs " + std::to_string(c);
                return res;
            }
        }
    res.degenerate = !lambda || !mu;
    res.params = SRGParams{n, k, lambda.value_or(0), mu.value_or(0)};
    return res;
}

struct Components {
    /// Component sizes, ordered by smallest member vertex.
    std::vector<std::size_t> sizes;
    std::size_t count() const { return sizes.size(); }
};

inline Components connected_components(const CodeGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    Components out;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::size_t size = 0;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const std::size_t a = stack.back();
            stack.pop_back();
            ++size;
            for (std::size_t b : g.neighbours(a))
                if (!seen[b]) {
                    seen[b] = 1;
                    stack.push_back(b);
                }
        }
        out.sizes.push_back(size);
    }
    return out;
}

struct ModularResult {
    bool is_modular = false;
    std::optional<Rational> r;
};

/**
 * Tests |{i : y_i R = y_j R}| = r |y_j R^x| for a single rational r over all
 * columns y_j. Zero columns are ignored.
 */
inline ModularResult is_modular(const Ring& R, const std::vector<std::vector<Elem>>& columns) {
    auto scaled = [&](const std::vector<Elem>& y, Elem s) {
        std::vector<Elem> v(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) v[i] = R.mul(y[i], s);
        return v;
    };
    std::vector<std::set<std::vector<Elem>>> modules;
    std::vector<std::size_t> unit_orbit;
    for (const auto& y : columns) {
        if (std::all_of(y.begin(), y.end(), [](Elem e) { return e == 0; })) continue;
        std::set<std::vector<Elem>> mod, orbit;
        for (Elem s = 0; s < R.order(); ++s) mod.insert(scaled(y, s));
        for (Elem u : R.units()) orbit.insert(scaled(y, u));
        modules.push_back(std::move(mod));
        unit_orbit.push_back(orbit.size());
    }
    ModularResult res;
    if (modules.empty()) {
        res.is_modular = true;
        return res;
    }
    for (std::size_t j = 0; j < modules.size(); ++j) {
        const auto same = static_cast<std::int64_t>(std::count(modules.begin(), modules.end(), modules[j]));
        const Rational ratio(same, static_cast<std::int64_t>(unit_orbit[j]));
        if (!res.r) {
            res.r = ratio;
        } else if (*res.r != ratio) {
            res.r.reset();
            return res;
        }
    }
    res.is_modular = true;
    return res;
}

/// Columns (x, f(x)) of the generator matrix of C_f, indexed by x in R.
inline std::vector<std::vector<Elem>> generator_columns(const CodeFunction& f) {
    std::vector<std::vector<Elem>> cols;
    for (Elem x = 0; x < f.ring->order(); ++x) cols.push_back({x, f(x)});
    return cols;
}

}  // namespace homring
