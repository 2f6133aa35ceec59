#pragma once

/**
 * @file teichmuller.hpp
 * @brief Teichmüller set and the decomposition a = a_t + a_m of a local ring.
 */

#include <vector>

#include "ring.hpp"

namespace homring {

struct TeichmullerData {
    /// 0 first, then g^0, g^1, ..., g^{q-2} for the generator g.
    std::vector<Elem> elements;
    /// Residue field size |R| / |M|.
    std::size_t q = 0;
    Elem generator = 0;
    /// nu[a] is the unique Teichmüller element with a - nu[a] in M.
    std::vector<Elem> nu;
    /// position[t] is the index of t in `elements`, or -1.
    std::vector<int> position;

    Elem teich_part(Elem a) const { return nu[a]; }
};

/// Multiplicative order of a unit.
inline std::uint64_t multiplicative_order(const Ring& R, Elem u) {
    require(R.is_unit(u), ErrorKind::InvalidParameter, "order of a non-unit");
    std::uint64_t k = 1;
    for (Elem x = u; x != R.one(); x = R.mul(x, u)) ++k;
    return k;
}

inline TeichmullerData teichmuller(const Ring& R) {
    if (!R.is_local()) fail(ErrorKind::NotLocal, R.spec() + " is not a local ring");
    const Ideal& M = R.radical();
    TeichmullerData td;
    td.q = R.order() / M.size();

    std::vector<Elem> cyclic;
    for (Elem u : R.units())
        if (R.pow(u, td.q - 1) == R.one()) cyclic.push_back(u);
    if (cyclic.size() != td.q - 1)
        fail(ErrorKind::InternalInvariantViolation,
             "unit subgroup of exponent q-1 has " + std::to_string(cyclic.size()) + " elements, expected " +
                 std::to_string(td.q - 1));

    bool have_gen = false;
    if (auto hint = R.teichmuller_hint(); hint && R.is_unit(*hint) && multiplicative_order(R, *hint) == td.q - 1) {
        td.generator = *hint;
        have_gen = true;
    }
    for (std::size_t i = 0; !have_gen && i < cyclic.size(); ++i) {
        if (multiplicative_order(R, cyclic[i]) == td.q - 1) {
            td.generator = cyclic[i];
            have_gen = true;
        }
    }
    if (!have_gen) fail(ErrorKind::InternalInvariantViolation, "Teichmüller units are not cyclic");

    td.elements.push_back(R.zero());
    Elem x = R.one();
    for (std::size_t i = 0; i + 1 < td.q; ++i) {
        td.elements.push_back(x);
        x = R.mul(x, td.generator);
    }

    td.position.assign(R.order(), -1);
    for (std::size_t i = 0; i < td.elements.size(); ++i) td.position[td.elements[i]] = static_cast<int>(i);

    td.nu.assign(R.order(), 0);
    for (Elem a = 0; a < R.order(); ++a) {
        int found = 0;
        for (Elem t : td.elements)
            if (M.contains(R.sub(a, t))) {
                td.nu[a] = t;
                ++found;
            }
        if (found != 1)
            fail(ErrorKind::InternalInvariantViolation, "element " + R.render(a) + " has " + std::to_string(found) +
                                                            " Teichmüller representatives");
    }
    return td;
}

}  // namespace homring
