#pragma once

/**
 * @file character.hpp
 * @brief Additive characters a -> omega_m^{e(a)} stored as exponent maps.
 */

#include <span>
#include <string>
#include <vector>

#include "automorphism.hpp"
#include "cyclotomic.hpp"
#include "ring.hpp"
#include "trace.hpp"

namespace homring {

struct Character {
    RingPtr ring;
    /// Order of the root of unity omega.
    std::int64_t conductor = 1;
    /// exponent[a] in Z_m.
    std::vector<std::int64_t> exponent;

    CyclotomicNumber operator()(Elem a) const { return CyclotomicNumber::root_power(conductor, exponent[a]); }

    /// sum_{a in elems} chi(a), exactly.
    template <typename Range>
    CyclotomicNumber sum(const Range& elems) const {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(conductor), 0);
        for (Elem a : elems) ++counts[exponent[a]];
        return CyclotomicNumber::from_exponent_counts(conductor, counts);
    }
};

/// Nonzero x whose principal ideal lies in the kernel of chi, if any.
inline std::optional<Elem> kernel_ideal_witness(const Ring& R, const std::vector<std::int64_t>& exponent) {
    for (Elem x = 1; x < R.order(); ++x) {
        bool inside = true;
        for (Elem r = 0; r < R.order() && inside; ++r)
            if (exponent[R.mul(r, x)] != 0) inside = false;
        if (inside) return x;
    }
    return std::nullopt;
}

/**
 * chi = Phi o T_k o ... o T_1 for a chain R -> ... -> Z_m, Phi(s) = omega_m^s.
 * Throws NotGenerating if the kernel of chi contains a nonzero ideal.
 */
inline Character generating_character(std::span<const TraceMap> chain) {
    require(!chain.empty(), ErrorKind::InvalidParameter, "empty trace chain");
    for (std::size_t i = 1; i < chain.size(); ++i)
        require(chain[i].source->spec() == chain[i - 1].target->spec(), ErrorKind::InvalidParameter,
                "trace chain is not composable");
    const auto& last = *chain.back().target;
    require(last.family() == RingFamily::IntegerModular || (last.galois() && last.galois()->r == 1),
            ErrorKind::InvalidParameter, "trace chain must end at Z_m, got " + last.spec());
    const RingPtr R = chain.front().source;
    Character chi{R, static_cast<std::int64_t>(last.order()), std::vector<std::int64_t>(R->order())};
    for (Elem a = 0; a < R->order(); ++a) {
        Elem v = a;
        for (const auto& T : chain) v = T(v);
        chi.exponent[a] = last.coords(v)[0];
    }
    if (auto w = kernel_ideal_witness(*R, chi.exponent))
        fail(ErrorKind::NotGenerating, "kernel of the character contains the ideal generated by " + R->render(*w));
    return chi;
}

inline Character generating_character(const TraceMap& T) { return generating_character(std::span(&T, 1)); }

/// Generating character of R built from default_absolute_trace.
inline Character default_character(const RingPtr& R) { return generating_character(default_absolute_trace(R)); }

/// chi = Phi_S o T where Phi_S is the default generating character of S.
inline Character character_through(const TraceMap& T) {
    const Character phi = default_character(T.target);
    Character chi{T.source, phi.conductor, std::vector<std::int64_t>(T.source->order())};
    for (Elem a = 0; a < T.source->order(); ++a) chi.exponent[a] = phi.exponent[T(a)];
    if (auto w = kernel_ideal_witness(*T.source, chi.exponent))
        fail(ErrorKind::NotGenerating, "kernel of the character contains the ideal generated by " +
                                           T.source->render(*w));
    return chi;
}

/// chi o sigma == chi pointwise.
inline bool char_fixed_by(const Character& chi, const Automorphism& sigma) {
    for (Elem a = 0; a < chi.exponent.size(); ++a)
        if (chi.exponent[sigma(a)] != chi.exponent[a]) return false;
    return true;
}

}  // namespace homring
