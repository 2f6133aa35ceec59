#pragma once

/**
 * @file ring.hpp
 * @brief Finite commutative rings with table-driven arithmetic.
 *
 * Every ring is described by its additive group Z_{m_0} x ... x Z_{m_{k-1}}
 * (one cyclic factor per basis element) and by bilinear structure constants
 * for the products of basis elements. Elements are canonical indices
 * 0..order-1 using the mixed-radix encoding
 *
 *     index = c_0 + m_0 * (c_1 + m_1 * (c_2 + ...))
 *
 * so Z_m elements are their residues, Galois ring elements are base-p^n
 * coefficient vectors and table-ring elements are row indices.
 *
 * Addition and multiplication tables are materialised at construction; the
 * ring is immutable afterwards and safe to share across threads.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace homring {

/// Canonical element index.
using Elem = std::uint32_t;

enum class RingFamily { IntegerModular, Galois, TableRing };

inline std::string to_string(RingFamily f) {
    switch (f) {
        case RingFamily::IntegerModular: return "IntegerModular";
        case RingFamily::Galois: return "Galois";
        case RingFamily::TableRing: return "TableRing";
    }
    return "?";
}

/// Largest ring order for which tables are built.
inline constexpr std::size_t kMaxRingOrder = 4096;

/**
 * Additive orders, basis names and structure constants.
 *
 * products[i][j] holds the coordinates of b_i * b_j; coordinate k is read
 * modulo orders[k]. `one` holds the coordinates of the identity.
 */
struct RingStructure {
    std::vector<std::int64_t> orders;
    std::vector<std::string> basis_names;
    std::vector<std::vector<std::vector<std::int64_t>>> products;
    std::vector<std::int64_t> one;
};

/// Galois-ring metadata: GR(p^n, r) = Z_{p^n}[x]/(h), h monic of degree r.
struct GaloisData {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    /// h = modulus[0] + modulus[1] x + ... + x^r (leading 1 included).
    std::vector<std::int64_t> modulus;
};

/// A set of ring elements closed under addition and ring multiplication.
struct Ideal {
    std::vector<Elem> elements;  // sorted
    std::vector<char> member;    // indicator over the ring

    std::size_t size() const { return elements.size(); }
    bool contains(Elem a) const { return member[a] != 0; }
    bool operator==(const Ideal& o) const { return elements == o.elements; }
};

class Ring {
   public:
    Ring(RingFamily family, std::string spec, RingStructure structure, std::optional<GaloisData> galois = {},
         std::optional<Elem> teichmuller_hint = {})
        : family_(family),
          spec_(std::move(spec)),
          structure_(std::move(structure)),
          galois_(std::move(galois)),
          teich_hint_(teichmuller_hint) {
        build();
    }

    RingFamily family() const { return family_; }
    /// Spec string this ring was built from, e.g. "GR:2,2,2".
    const std::string& spec() const { return spec_; }
    std::size_t order() const { return order_; }
    std::uint64_t characteristic() const { return characteristic_; }
    const RingStructure& structure() const { return structure_; }
    const std::optional<GaloisData>& galois() const { return galois_; }
    std::optional<Elem> teichmuller_hint() const { return teich_hint_; }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem result = one_;
        Elem base = a;
        while (e > 0) {
            if (e & 1u) result = mul(result, base);
            base = mul(base, base);
            e >>= 1u;
        }
        return result;
    }

    /// The element k * 1.
    Elem from_int(std::int64_t k) const {
        const auto m = static_cast<std::int64_t>(characteristic_);
        k %= m;
        if (k < 0) k += m;
        Elem acc = 0;
        Elem step = one_;
        auto e = static_cast<std::uint64_t>(k);
        while (e > 0) {
            if (e & 1u) acc = add(acc, step);
            step = add(step, step);
            e >>= 1u;
        }
        return acc;
    }

    std::vector<std::int64_t> coords(Elem a) const {
        std::vector<std::int64_t> c(structure_.orders.size());
        std::int64_t rest = a;
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = rest % structure_.orders[i];
            rest /= structure_.orders[i];
        }
        return c;
    }

    Elem from_coords(std::span<const std::int64_t> c) const {
        require(c.size() == structure_.orders.size(), ErrorKind::InvalidParameter, "coordinate length mismatch");
        std::int64_t idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            std::int64_t v = c[i] % structure_.orders[i];
            if (v < 0) v += structure_.orders[i];
            idx = idx * structure_.orders[i] + v;
        }
        return static_cast<Elem>(idx);
    }

    /// Integer for Z_m, coefficient tuple for Galois rings, polynomial string otherwise.
    std::string render(Elem a) const {
        const auto c = coords(a);
        if (family_ == RingFamily::IntegerModular) return std::to_string(c[0]);
        if (family_ == RingFamily::Galois) {
            std::string s = "(";
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(c[i]);
            }
            return s + ")";
        }
        std::string s;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += "+";
            const auto& name = structure_.basis_names[i];
            if (name == "1")
                s += std::to_string(c[i]);
            else if (c[i] == 1)
                s += name;
            else
                s += std::to_string(c[i]) + name;
        }
        return s.empty() ? "0" : s;
    }

    const std::vector<Elem>& units() const { return units_; }
    bool is_unit(Elem a) const { return inverse_[a] != kNoInverse; }
    /// Multiplicative inverse of a unit.
    Elem inverse(Elem a) const {
        require(is_unit(a), ErrorKind::InvalidParameter, "element " + render(a) + " is not a unit");
        return inverse_[a];
    }

    /// Nilpotent elements (the Jacobson radical of a finite commutative ring).
    const Ideal& radical() const { return radical_; }
    /// Annihilator of the radical.
    const Ideal& socle() const { return socle_; }
    /// Non-units are closed under addition.
    bool is_local() const { return local_; }

    /// The principal ideal R*a, sorted.
    std::vector<Elem> principal_ideal(Elem a) const {
        std::vector<char> seen(order_, 0);
        std::vector<Elem> out;
        for (Elem r = 0; r < order_; ++r) {
            const Elem v = mul(r, a);
            if (!seen[v]) {
                seen[v] = 1;
                out.push_back(v);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const Ring& o) const { return spec_ == o.spec_ && structure_.orders == o.structure_.orders; }

   private:
    static constexpr Elem kNoInverse = ~Elem{0};

    void build() {
        const auto& orders = structure_.orders;
        const std::size_t k = orders.size();
        require(k > 0, ErrorKind::InvalidRing, "empty basis");
        require(structure_.products.size() == k, ErrorKind::InvalidRing, "structure constants: wrong row count");
        std::size_t n = 1;
        for (auto m : orders) {
            require(m >= 2, ErrorKind::InvalidRing, "basis element additive orders must be >= 2");
            n *= static_cast<std::size_t>(m);
            require(n <= kMaxRingOrder, ErrorKind::BudgetExceeded,
                    "ring order exceeds " + std::to_string(kMaxRingOrder));
        }
        order_ = n;
        if (structure_.basis_names.size() != k) {
            structure_.basis_names.resize(k);
            for (std::size_t i = 0; i < k; ++i) structure_.basis_names[i] = "e" + std::to_string(i);
        }
        for (std::size_t i = 0; i < k; ++i) {
            require(structure_.products[i].size() == k, ErrorKind::InvalidRing, "structure constants: wrong column count");
            for (std::size_t j = 0; j < k; ++j) {
                require(structure_.products[i][j].size() == k, ErrorKind::InvalidRing,
                        "structure constants: wrong product length");
                // b_i has additive order m_i, so m_i * (b_i b_j) must vanish.
                for (std::size_t t = 0; t < k; ++t) {
                    const std::int64_t g = std::gcd(orders[i], orders[j]);
                    require((g * structure_.products[i][j][t]) % orders[t] == 0, ErrorKind::InvalidRing,
                            "structure constants are not well defined modulo the additive orders");
                }
            }
        }
        require(structure_.one.size() == k, ErrorKind::InvalidRing, "identity coordinates have wrong length");
        one_ = from_coords(structure_.one);

        std::vector<std::vector<std::int64_t>> all(n);
        for (Elem a = 0; a < n; ++a) all[a] = coords(a);

        add_.resize(n * n);
        mul_.resize(n * n);
        neg_.resize(n);
        std::vector<std::int64_t> tmp(k);
        for (Elem a = 0; a < n; ++a) {
            for (std::size_t t = 0; t < k; ++t) tmp[t] = -all[a][t];
            neg_[a] = static_cast<std::uint16_t>(from_coords(tmp));
            for (Elem b = 0; b < n; ++b) {
                for (std::size_t t = 0; t < k; ++t) tmp[t] = all[a][t] + all[b][t];
                add_[a * n + b] = static_cast<std::uint16_t>(from_coords(tmp));
                std::fill(tmp.begin(), tmp.end(), 0);
                for (std::size_t i = 0; i < k; ++i) {
                    if (all[a][i] == 0) continue;
                    for (std::size_t j = 0; j < k; ++j) {
                        if (all[b][j] == 0) continue;
                        const std::int64_t coef = all[a][i] * all[b][j];
                        const auto& prod = structure_.products[i][j];
                        for (std::size_t t = 0; t < k; ++t) tmp[t] = (tmp[t] + coef * prod[t]) % orders[t];
                    }
                }
                mul_[a * n + b] = static_cast<std::uint16_t>(from_coords(tmp));
            }
        }

        // Additive order of 1.
        std::uint64_t ch = 1;
        for (std::size_t t = 0; t < k; ++t) {
            const std::int64_t c = all[one_][t];
            ch = std::lcm(ch, static_cast<std::uint64_t>(orders[t] / std::gcd(c, orders[t])));
        }
        characteristic_ = ch;

        verify_axioms();
        build_structure();
    }

    void verify_axioms() const {
        const std::size_t n = order_;
        const std::size_t k = structure_.orders.size();
        // Identity and commutativity are checked on the full table.
        for (Elem a = 0; a < n; ++a) {
            if (mul(one_, a) != a)
                fail(ErrorKind::InvalidRing, "identity fails: 1*" + render(a) + " != " + render(a));
            for (Elem b = a + 1; b < n; ++b)
                if (mul(a, b) != mul(b, a))
                    fail(ErrorKind::InvalidRing, "not commutative at (" + render(a) + "," + render(b) + ")");
        }
        // Multiplication is bilinear by construction, so associativity on the
        // basis is equivalent to associativity everywhere. Small rings are
        // additionally checked on all triples.
        std::vector<Elem> basis(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::int64_t> c(k, 0);
            c[i] = 1;
            basis[i] = from_coords(c);
        }
        auto check_assoc = [&](Elem a, Elem b, Elem c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                fail(ErrorKind::InvalidRing,
                     "not associative at (" + render(a) + "," + render(b) + "," + render(c) + ")");
        };
        for (Elem a : basis)
            for (Elem b : basis)
                for (Elem c : basis) check_assoc(a, b, c);
        if (n * n * n <= 20'000'000) {
            for (Elem a = 0; a < n; ++a)
                for (Elem b = 0; b < n; ++b)
                    for (Elem c = 0; c < n; ++c) {
                        check_assoc(a, b, c);
                        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                            fail(ErrorKind::InvalidRing, "not distributive at (" + render(a) + "," + render(b) +
                                                             "," + render(c) + ")");
                    }
        }
    }

    void build_structure() {
        const std::size_t n = order_;
        inverse_.assign(n, kNoInverse);
        for (Elem a = 0; a < n; ++a) {
            if (inverse_[a] != kNoInverse) continue;
            for (Elem b = 0; b < n; ++b)
                if (mul(a, b) == one_) {
                    inverse_[a] = b;
                    inverse_[b] = a;
                    break;
                }
        }
        for (Elem a = 0; a < n; ++a)
            if (inverse_[a] != kNoInverse) units_.push_back(a);

        auto make_ideal = [n](const std::vector<Elem>& elems) {
            Ideal I;
            I.elements = elems;
            I.member.assign(n, 0);
            for (Elem e : elems) I.member[e] = 1;
            return I;
        };

        std::vector<Elem> nil;
        for (Elem a = 0; a < n; ++a) {
            Elem x = a;
            for (std::size_t step = 0; step <= n && x != 0; ++step) x = mul(x, a);
            if (x == 0) nil.push_back(a);
        }
        radical_ = make_ideal(nil);

        std::vector<Elem> soc;
        for (Elem a = 0; a < n; ++a) {
            bool ann = true;
            for (Elem m : radical_.elements)
                if (mul(a, m) != 0) {
                    ann = false;
                    break;
                }
            if (ann) soc.push_back(a);
        }
        socle_ = make_ideal(soc);

        local_ = true;
        std::vector<Elem> nonunits;
        for (Elem a = 0; a < n; ++a)
            if (!is_unit(a)) nonunits.push_back(a);
        std::vector<char> is_nonunit(n, 0);
        for (Elem a : nonunits) is_nonunit[a] = 1;
        for (Elem a : nonunits) {
            for (Elem b : nonunits)
                if (!is_nonunit[add(a, b)]) {
                    local_ = false;
                    break;
                }
            if (!local_) break;
        }
    }

    RingFamily family_;
    std::string spec_;
    RingStructure structure_;
    std::optional<GaloisData> galois_;
    std::optional<Elem> teich_hint_;

    std::size_t order_ = 0;
    std::uint64_t characteristic_ = 0;
    Elem one_ = 0;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> neg_;
    std::vector<Elem> inverse_;
    std::vector<Elem> units_;
    Ideal radical_;
    Ideal socle_;
    bool local_ = false;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Z_m.
inline RingPtr make_integer_ring(std::int64_t m) {
    require(m >= 2, ErrorKind::InvalidParameter, "Z_m needs m >= 2, got " + std::to_string(m));
    require(static_cast<std::size_t>(m) <= kMaxRingOrder, ErrorKind::BudgetExceeded,
            "Z_m with m > " + std::to_string(kMaxRingOrder));
    RingStructure s{{m}, {"1"}, {{{1}}}, {1}};
    return std::make_shared<const Ring>(RingFamily::IntegerModular, "Zm:" + std::to_string(m), std::move(s));
}

/// F_p[x,y]/(x^2, y^2) on the basis {1, x, y, xy}.
inline RingStructure fxy_structure(std::int64_t p) {
    // Basis indices: 0 = 1, 1 = x, 2 = y, 3 = xy.
    auto e = [](int i) {
        std::vector<std::int64_t> v(4, 0);
        if (i >= 0) v[i] = 1;
        return v;
    };
    const std::vector<std::int64_t> z(4, 0);
    RingStructure s;
    s.orders = {p, p, p, p};
    s.basis_names = {"1", "x", "y", "xy"};
    s.products = {
        {e(0), e(1), e(2), e(3)},
        {e(1), z, e(3), z},
        {e(2), e(3), z, z},
        {e(3), z, z, z},
    };
    s.one = e(0);
    return s;
}

/// Z_4[t]/(t^2 + 2) on the basis {1, t}; t^2 = 2.
inline RingStructure z4x_structure() {
    RingStructure s;
    s.orders = {4, 4};
    s.basis_names = {"1", "t"};
    s.products = {
        {{1, 0}, {0, 1}},
        {{0, 1}, {2, 0}},
    };
    s.one = {1, 0};
    return s;
}

/// A ring from explicit structure constants; axioms are verified.
inline RingPtr make_table_ring(RingStructure structure, std::string name = "table") {
    return std::make_shared<const Ring>(RingFamily::TableRing, std::move(name), std::move(structure));
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Presets "FXY:<p>" and "Z4X".
inline RingPtr make_table_ring(std::string_view preset) {
    if (preset == "Z4X") return make_table_ring(z4x_structure(), "Z4X");
    if (preset.starts_with("FXY:")) {
        const std::string digits(preset.substr(4));
        std::int64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoll(digits, &used);
            if (used != digits.size()) p = 0;
        } catch (const std::exception&) {
            p = 0;
        }
        require(is_prime(p), ErrorKind::InvalidParameter, "FXY needs a prime, got '" + digits + "'");
        return make_table_ring(fxy_structure(p), "FXY:" + std::to_string(p));
    }
    fail(ErrorKind::UnknownPreset, "unknown table ring preset '" + std::string(preset) + "'");
}

}  // namespace homring
