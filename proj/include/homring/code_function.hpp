#pragma once

/**
 * @file code_function.hpp
 * @brief The maps f : R -> R that parameterise the subcodes C_{f,S}.
 *
 *  - power(d):            x -> x^d
 *  - frank(pi):           x0 + p x1 -> p * pi(x0) * x1 on GR(p^2, r)
 *  - sigma_quadratic(s):  a -> s(a) a - s(a_m) a_m on a local ring
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "galois_ring.hpp"
#include "ring.hpp"
#include "teichmuller.hpp"

namespace homring {

enum class FunctionKind { Power, Frank, SigmaQuadratic, Custom };

struct CodeFunction {
    RingPtr ring;
    FunctionKind kind = FunctionKind::Custom;
    std::string description;
    std::vector<Elem> table;
    /// Set for SigmaQuadratic; the character condition is checked when a code is built.
    std::optional<Automorphism> sigma;

    Elem operator()(Elem a) const { return table[a]; }
};

inline CodeFunction power_map(RingPtr R, std::int64_t d) {
    require(d >= 1, ErrorKind::InvalidParameter, "power map needs d >= 1");
    std::vector<Elem> t(R->order());
    for (Elem a = 0; a < R->order(); ++a) t[a] = R->pow(a, static_cast<std::uint64_t>(d));
    return CodeFunction{std::move(R), FunctionKind::Power, "pow:" + std::to_string(d), std::move(t), std::nullopt};
}

/// Checks one-line notation over Teichmüller positions: a bijection fixing 0.
inline void check_teichmuller_permutation(const std::vector<std::size_t>& perm, std::size_t q) {
    if (perm.size() != q)
        fail(ErrorKind::BadPermutation,
             "permutation has " + std::to_string(perm.size()) + " entries, expected " + std::to_string(q));
    std::vector<char> seen(q, 0);
    for (auto v : perm) {
        if (v >= q || seen[v]) fail(ErrorKind::BadPermutation, "not a bijection of the Teichmüller set");
        seen[v] = 1;
    }
    if (perm[0] != 0) fail(ErrorKind::BadPermutation, "permutation does not fix 0");
}

/// A uniformly shuffled 0-fixing permutation of {0..q-1}; reproducible across platforms.
inline std::vector<std::size_t> random_teichmuller_permutation(std::size_t q, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::size_t> perm(q);
    for (std::size_t i = 0; i < q; ++i) perm[i] = i;
    for (std::size_t i = q - 1; i >= 2; --i) {
        // Fisher-Yates over positions 1..i.
        const std::size_t j = 1 + static_cast<std::size_t>(gen() % i);
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

inline CodeFunction frank_map(RingPtr R, std::vector<std::size_t> perm) {
    if (!R->galois() || R->galois()->n != 2)
        fail(ErrorKind::WrongRingFamily, "frank map needs GR(p^2, r), got " + R->spec());
    const auto td = teichmuller(*R);
    check_teichmuller_permutation(perm, td.q);
    const Elem p = R->from_int(R->galois()->p);
    std::vector<Elem> t(R->order());
    for (Elem a = 0; a < R->order(); ++a) {
        const auto digits = padic_digits(*R, td, a);
        const Elem image = td.elements[perm[static_cast<std::size_t>(td.position[digits[0]])]];
        t[a] = R->mul(p, R->mul(image, digits[1]));
    }
    std::string desc = "frank:";
    for (std::size_t i = 0; i < perm.size(); ++i) desc += (i ? "," : "") + std::to_string(perm[i]);
    return CodeFunction{std::move(R), FunctionKind::Frank, std::move(desc), std::move(t), std::nullopt};
}

inline CodeFunction frank_map(RingPtr R) {
    const auto q = teichmuller(*R).q;
    std::vector<std::size_t> id(q);
    for (std::size_t i = 0; i < q; ++i) id[i] = i;
    auto f = frank_map(std::move(R), std::move(id));
    f.description = "frank:id";
    return f;
}

inline CodeFunction sigma_quadratic(RingPtr R, Automorphism sigma) {
    const auto td = teichmuller(*R);
    std::vector<Elem> t(R->order());
    for (Elem a = 0; a < R->order(); ++a) {
        const Elem am = R->sub(a, td.nu[a]);
        t[a] = R->sub(R->mul(sigma(a), a), R->mul(sigma(am), am));
    }
    std::string desc = "sigmaquad:" + sigma.tag;
    return CodeFunction{std::move(R), FunctionKind::SigmaQuadratic, std::move(desc), std::move(t), std::move(sigma)};
}

inline CodeFunction custom_function(RingPtr R, std::vector<Elem> table, std::string desc = "table") {
    require(table.size() == R->order(), ErrorKind::InvalidParameter, "function table has wrong length");
    for (Elem v : table) require(v < R->order(), ErrorKind::InvalidParameter, "function value out of range");
    return CodeFunction{std::move(R), FunctionKind::Custom, std::move(desc), std::move(table), std::nullopt};
}

/// f(x) = c x, the R-linear map used to exercise one-weight codes.
inline CodeFunction linear_map(RingPtr R, Elem c) {
    std::vector<Elem> t(R->order());
    for (Elem a = 0; a < R->order(); ++a) t[a] = R->mul(c, a);
    return custom_function(std::move(R), std::move(t), "linear");
}

}  // namespace homring
