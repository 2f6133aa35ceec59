#pragma once

/**
 * @file automorphism.hpp
 * @brief Ring automorphisms: Frobenius on Galois rings, the x/y swap on
 * F_p[x,y]/(x^2,y^2) and conjugation on Z_4[t]/(t^2+2).
 */

#include <string>
#include <vector>

#include "galois_ring.hpp"
#include "ring.hpp"
#include "teichmuller.hpp"

namespace homring {

struct Automorphism {
    RingPtr ring;
    std::vector<Elem> table;
    /// "frobenius^k", "swap-xy", "conj", "identity" or "custom".
    std::string tag;

    Elem operator()(Elem a) const { return table[a]; }
    bool is_identity() const {
        for (Elem a = 0; a < table.size(); ++a)
            if (table[a] != a) return false;
        return true;
    }
};

/// Exhaustive check that `table` is a bijective ring homomorphism fixing 0 and 1.
inline void verify_automorphism(const Ring& R, const std::vector<Elem>& table, const std::string& tag) {
    auto bad = [&](const std::string& why) {
        fail(ErrorKind::InternalInvariantViolation, "automorphism " + tag + " on " + R.spec() + ": " + why);
    };
    if (table.size() != R.order()) bad("table size mismatch");
    std::vector<char> hit(R.order(), 0);
    for (Elem v : table) {
        if (v >= R.order() || hit[v]) bad("not a bijection");
        hit[v] = 1;
    }
    if (table[R.zero()] != R.zero() || table[R.one()] != R.one()) bad("does not fix 0 and 1");
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = 0; b < R.order(); ++b) {
            if (table[R.add(a, b)] != R.add(table[a], table[b])) bad("not additive");
            if (table[R.mul(a, b)] != R.mul(table[a], table[b])) bad("not multiplicative");
        }
}

inline Automorphism make_automorphism(RingPtr R, std::vector<Elem> table, std::string tag) {
    verify_automorphism(*R, table, tag);
    return Automorphism{std::move(R), std::move(table), std::move(tag)};
}

inline Automorphism identity_automorphism(RingPtr R) {
    std::vector<Elem> t(R->order());
    for (Elem a = 0; a < t.size(); ++a) t[a] = a;
    return Automorphism{std::move(R), std::move(t), "identity"};
}

inline Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
    std::vector<Elem> t(inner.table.size());
    for (Elem a = 0; a < t.size(); ++a) t[a] = outer.table[inner.table[a]];
    return Automorphism{inner.ring, std::move(t), outer.tag + "*" + inner.tag};
}

inline Automorphism power_of(const Automorphism& sigma, std::int64_t k) {
    require(k >= 0, ErrorKind::InvalidParameter, "negative automorphism power");
    Automorphism result = identity_automorphism(sigma.ring);
    for (std::int64_t i = 0; i < k; ++i) result = compose(sigma, result);
    if (k == 1) return sigma;
    result.tag = sigma.tag + "^" + std::to_string(k);
    return result;
}

inline Automorphism inverse(const Automorphism& sigma) {
    std::vector<Elem> t(sigma.table.size());
    for (Elem a = 0; a < t.size(); ++a) t[sigma.table[a]] = a;
    return Automorphism{sigma.ring, std::move(t), sigma.tag + "^-1"};
}

/// Smallest k >= 1 with sigma^k = id.
inline std::size_t automorphism_order(const Automorphism& sigma) {
    Automorphism cur = sigma;
    std::size_t k = 1;
    while (!cur.is_identity()) {
        cur = compose(sigma, cur);
        ++k;
    }
    return k;
}

/// sum p^i a_i  ->  sum p^i a_i^p on a Galois ring.
inline Automorphism frobenius(RingPtr R) {
    if (!R->galois()) fail(ErrorKind::WrongRingFamily, "Frobenius needs a Galois ring, got " + R->spec());
    const auto td = teichmuller(*R);
    const auto p = R->galois()->p;
    std::vector<Elem> t(R->order());
    for (Elem a = 0; a < R->order(); ++a) {
        auto digits = padic_digits(*R, td, a);
        for (auto& d : digits) d = R->pow(d, p);
        t[a] = from_padic_digits(*R, digits);
    }
    return make_automorphism(std::move(R), std::move(t), "frobenius");
}

/// Swap the x and y coefficients on F_p[x,y]/(x^2,y^2).
inline Automorphism swap_xy(RingPtr R) {
    const auto& names = R->structure().basis_names;
    if (names != std::vector<std::string>{"1", "x", "y", "xy"})
        fail(ErrorKind::WrongRingFamily, "swap-xy needs an FXY ring, got " + R->spec());
    std::vector<Elem> t(R->order());
    for (Elem a = 0; a < R->order(); ++a) {
        auto c = R->coords(a);
        std::swap(c[1], c[2]);
        t[a] = R->from_coords(c);
    }
    return make_automorphism(std::move(R), std::move(t), "swap-xy");
}

/// r0 + t r1 -> r0 - t r1 on Z_4[t]/(t^2+2).
inline Automorphism conjugation(RingPtr R) {
    if (R->structure().basis_names != std::vector<std::string>{"1", "t"})
        fail(ErrorKind::WrongRingFamily, "conj needs the Z4X ring, got " + R->spec());
    std::vector<Elem> t(R->order());
    for (Elem a = 0; a < R->order(); ++a) {
        auto c = R->coords(a);
        c[1] = -c[1];
        t[a] = R->from_coords(c);
    }
    return make_automorphism(std::move(R), std::move(t), "conj");
}

/// Tags: "frobenius", "frobenius^k", "swap-xy" (alias "swapxy"), "conj", "identity".
inline Automorphism named_automorphism(RingPtr R, const std::string& tag) {
    if (tag == "identity") return identity_automorphism(std::move(R));
    if (tag == "swap-xy" || tag == "swapxy") return swap_xy(std::move(R));
    if (tag == "conj") return conjugation(std::move(R));
    if (tag == "frobenius") return frobenius(std::move(R));
    if (tag.starts_with("frobenius^")) {
        const auto k = std::stoll(tag.substr(10));
        return power_of(frobenius(std::move(R)), k);
    }
    fail(ErrorKind::UnknownPreset, "unknown automorphism '" + tag + "'");
}

}  // namespace homring
