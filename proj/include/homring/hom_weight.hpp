#pragma once

/**
 * @file hom_weight.hpp
 * @brief Homogeneous weights, computed from the defining axioms and from the
 * unit-averaged character sum.
 */

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "character.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace homring {

struct WeightTable {
    RingPtr ring;
    Rational gamma;
    std::vector<Rational> table;

    const Rational& operator()(Elem a) const { return table[a]; }
};

/// The generator classes {y : Ry = Rx} of R and their principal ideals.
struct CyclicSubmodules {
    /// Principal ideals, ordered by size and then lexicographically.
    std::vector<std::vector<Elem>> ideals;
    /// Elements generating each ideal.
    std::vector<std::vector<Elem>> generators;
    /// class_of[x] indexes `ideals`.
    std::vector<std::size_t> class_of;
};

inline CyclicSubmodules cyclic_submodules(const Ring& R) {
    std::map<std::vector<Elem>, std::vector<Elem>> by_ideal;
    for (Elem x = 0; x < R.order(); ++x) by_ideal[R.principal_ideal(x)].push_back(x);
    CyclicSubmodules cs;
    for (auto& [ideal, gens] : by_ideal) {
        cs.ideals.push_back(ideal);
        cs.generators.push_back(gens);
    }
    std::vector<std::size_t> order(cs.ideals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cs.ideals[a].size() < cs.ideals[b].size(); });
    CyclicSubmodules sorted;
    for (std::size_t i : order) {
        sorted.ideals.push_back(std::move(cs.ideals[i]));
        sorted.generators.push_back(std::move(cs.generators[i]));
    }
    sorted.class_of.assign(R.order(), 0);
    for (std::size_t c = 0; c < sorted.generators.size(); ++c)
        for (Elem x : sorted.generators[c]) sorted.class_of[x] = c;
    return sorted;
}

/// w(x) = gamma * (1 - (1/|R^x|) sum_{u in R^x} chi(xu)).
inline WeightTable hom_weight_from_character(const Character& chi, const Rational& gamma = Rational(1)) {
    const Ring& R = *chi.ring;
    WeightTable wt{chi.ring, gamma, std::vector<Rational>(R.order())};
    const Rational units(static_cast<std::int64_t>(R.units().size()));
    std::vector<Elem> orbit(R.units().size());
    for (Elem x = 0; x < R.order(); ++x) {
        for (std::size_t i = 0; i < orbit.size(); ++i) orbit[i] = R.mul(x, R.units()[i]);
        const Rational s = chi.sum(orbit).to_rational();
        wt.table[x] = gamma * (Rational(1) - s / units);
    }
    return wt;
}

/**
 * Triangular solve over the cyclic submodules, smallest first:
 * for each nonzero N, sum_{N' <= N} w(N') * #gen(N') = gamma * |N|.
 */
inline WeightTable hom_weight_axiomatic(const RingPtr& ring, const Rational& gamma = Rational(1)) {
    const Ring& R = *ring;
    const auto cs = cyclic_submodules(R);
    std::vector<Rational> class_weight(cs.ideals.size(), Rational(0));
    std::vector<std::vector<char>> member(cs.ideals.size(), std::vector<char>(R.order(), 0));
    for (std::size_t c = 0; c < cs.ideals.size(); ++c)
        for (Elem e : cs.ideals[c]) member[c][e] = 1;

    for (std::size_t c = 0; c < cs.ideals.size(); ++c) {
        if (cs.ideals[c].size() == 1) continue;  // {0}
        Rational rhs = gamma * Rational(static_cast<std::int64_t>(cs.ideals[c].size()));
        for (std::size_t d = 0; d < c; ++d)
            if (member[c][cs.generators[d].front()])
                rhs -= class_weight[d] * Rational(static_cast<std::int64_t>(cs.generators[d].size()));
        if (cs.generators[c].empty()) fail(ErrorKind::SingularSystem, "cyclic submodule without generators");
        class_weight[c] = rhs / Rational(static_cast<std::int64_t>(cs.generators[c].size()));
    }
    WeightTable wt{ring, gamma, std::vector<Rational>(R.order())};
    for (Elem x = 0; x < R.order(); ++x) wt.table[x] = class_weight[cs.class_of[x]];
    return wt;
}

/// w(0) = 0, w(x) = 1 otherwise. Homogeneous only on fields (with gamma = (q-1)/q).
inline WeightTable hamming_table(const RingPtr& ring) {
    WeightTable wt{ring, Rational(0), std::vector<Rational>(ring->order(), Rational(1))};
    wt.table[ring->zero()] = 0;
    if (ring->radical().size() == 1)
        wt.gamma = Rational(static_cast<std::int64_t>(ring->order() - 1), static_cast<std::int64_t>(ring->order()));
    return wt;
}

struct WeightViolation {
    /// "zero", "class" or "orbit-sum".
    std::string axiom;
    std::string witness;
};

struct WeightReport {
    std::vector<WeightViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustive check of both homogeneous-weight axioms against wt.gamma.
inline WeightReport validate_weight(const WeightTable& wt) {
    const Ring& R = *wt.ring;
    WeightReport rep;
    if (wt.table[R.zero()] != 0) rep.violations.push_back({"zero", "w(0) = " + to_short_string(wt.table[0])});
    const auto cs = cyclic_submodules(R);
    for (std::size_t c = 0; c < cs.ideals.size(); ++c) {
        const auto& gens = cs.generators[c];
        for (Elem y : gens)
            if (wt.table[y] != wt.table[gens.front()])
                rep.violations.push_back({"class", "Rx = Ry but w(" + R.render(gens.front()) + ") = " +
                                                       to_short_string(wt.table[gens.front()]) + " != w(" +
                                                       R.render(y) + ") = " + to_short_string(wt.table[y])});
        if (cs.ideals[c].size() == 1) continue;
        Rational sum(0);
        for (Elem y : cs.ideals[c]) sum += wt.table[y];
        const Rational expected = wt.gamma * Rational(static_cast<std::int64_t>(cs.ideals[c].size()));
        if (sum != expected)
            rep.violations.push_back({"orbit-sum", "x = " + R.render(gens.front()) + ": sum over Rx is " +
                                                       to_short_string(sum) + ", expected " +
                                                       to_short_string(expected)});
    }
    return rep;
}

/// (q-1)/q for a local ring with residue field of size q.
inline Rational hamming_normalized_gamma(const Ring& R) {
    require(R.is_local(), ErrorKind::NotLocal, "hamming-normalized gamma needs a local ring");
    const auto q = static_cast<std::int64_t>(R.order() / R.radical().size());
    return Rational(q - 1, q);
}

/// Thread-safe memo of axiomatic weight tables keyed by (ring spec, gamma).
class WeightCache {
   public:
    const WeightTable& get(const RingPtr& ring, const Rational& gamma) {
        const auto key = ring->spec() + "|" + to_fraction_string(gamma);
        std::lock_guard lock(mu_);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, hom_weight_axiomatic(ring, gamma)).first;
        return it->second;
    }

   private:
    std::mutex mu_;
    std::map<std::string, WeightTable> cache_;
};

}  // namespace homring
