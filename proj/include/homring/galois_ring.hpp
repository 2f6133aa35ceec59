#pragma once

/**
 * @file galois_ring.hpp
 * @brief Galois rings GR(p^n, r) and their p-adic digit expansion.
 *
 * GR(p^n, r) is built as Z_{p^n}[x]/(h) where h is the Hensel lift of the
 * lexicographically smallest primitive polynomial of degree r over F_p to
 * the monic divisor of x^{p^r - 1} - 1 over Z_{p^n}. The class xi of x is
 * then a generator of the Teichmüller units.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "ring.hpp"
#include "teichmuller.hpp"

namespace homring {

namespace detail {

using Poly = std::vector<std::int64_t>;  // low degree first

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

/// a*b mod (monic h, coefficients mod m); a, b have degree < deg h.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& h, std::int64_t m) {
    const std::size_t r = h.size() - 1;
    Poly prod(2 * r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], m);
    for (std::size_t d = prod.size(); d-- > r;) {
        const std::int64_t c = prod[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= r; ++i) prod[d - r + i] = mod(prod[d - r + i] - c * h[i], m);
    }
    prod.resize(r);
    return prod;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& h, std::int64_t m) {
    const std::size_t r = h.size() - 1;
    Poly result(r, 0);
    result[0] = 1 % m;
    while (e > 0) {
        if (e & 1u) result = mulmod(result, base, h, m);
        base = mulmod(base, base, h, m);
        e >>= 1u;
    }
    return result;
}

/// The class of x modulo h (for deg h = 1 this is the constant -h_0).
inline Poly x_class(const Poly& h, std::int64_t m) {
    const std::size_t r = h.size() - 1;
    Poly x(r, 0);
    if (r == 1)
        x[0] = mod(-h[0], m);
    else
        x[1] = 1;
    return x;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace detail

/**
 * Lexicographically smallest monic primitive polynomial of degree r over F_p,
 * comparing (c_{r-1}, ..., c_0). Returned with the leading 1.
 */
inline std::vector<std::int64_t> smallest_primitive_polynomial(std::int64_t p, std::uint32_t r) {
    const std::uint64_t order = detail::ipow(static_cast<std::uint64_t>(p), r) - 1;
    const auto factors = detail::prime_factors(order);
    const std::uint64_t candidates = detail::ipow(static_cast<std::uint64_t>(p), r);
    for (std::uint64_t code = 0; code < candidates; ++code) {
        detail::Poly h(r + 1, 0);
        std::uint64_t rest = code;
        for (std::uint32_t i = 0; i < r; ++i) {
            h[i] = static_cast<std::int64_t>(rest % p);
            rest /= p;
        }
        h[r] = 1;
        if (h[0] == 0) continue;
        const auto x = detail::x_class(h, p);
        auto one = detail::Poly(r, 0);
        one[0] = 1;
        if (detail::powmod(x, order, h, p) != one) continue;
        bool primitive = true;
        for (auto l : factors)
            if (detail::powmod(x, order / l, h, p) == one) {
                primitive = false;
                break;
            }
        if (primitive) return h;
    }
    fail(ErrorKind::InternalInvariantViolation, "no primitive polynomial found");
}

/// Hensel lift of a primitive polynomial over F_p to the divisor of x^{p^r-1}-1 over Z_{p^n}.
inline std::vector<std::int64_t> hensel_lift(const std::vector<std::int64_t>& hbar, std::int64_t p, std::uint32_t n) {
    if (n == 1) return hbar;
    const std::size_t r = hbar.size() - 1;
    const auto m = static_cast<std::int64_t>(detail::ipow(static_cast<std::uint64_t>(p), n));
    const std::uint64_t q = detail::ipow(static_cast<std::uint64_t>(p), r);
    // Teichmüller lift of x in Z_{p^n}[x]/(hbar): x^{q^{n-1}}.
    detail::Poly xi = detail::x_class(hbar, m);
    for (std::uint32_t i = 0; i + 1 < n; ++i) xi = detail::powmod(xi, q, hbar, m);

    // h(X) = prod_{i<r} (X - xi^{p^i}) with coefficients in Z_{p^n}[x]/(hbar).
    std::vector<detail::Poly> h(1, detail::Poly(r, 0));
    h[0][0] = 1;
    detail::Poly root = xi;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<detail::Poly> next(h.size() + 1, detail::Poly(r, 0));
        for (std::size_t d = 0; d < h.size(); ++d) {
            for (std::size_t c = 0; c < r; ++c) next[d + 1][c] = detail::mod(next[d + 1][c] + h[d][c], m);
            const auto t = detail::mulmod(h[d], root, hbar, m);
            for (std::size_t c = 0; c < r; ++c) next[d][c] = detail::mod(next[d][c] - t[c], m);
        }
        h = std::move(next);
        root = detail::powmod(root, static_cast<std::uint64_t>(p), hbar, m);
    }
    std::vector<std::int64_t> out(r + 1);
    for (std::size_t d = 0; d <= r; ++d) {
        for (std::size_t c = 1; c < r; ++c)
            if (h[d][c] != 0) fail(ErrorKind::InternalInvariantViolation, "Hensel lift left the base ring");
        out[d] = h[d][0];
    }
    return out;
}

inline RingPtr make_galois_ring(std::int64_t p, std::int64_t n, std::int64_t r) {
    require(is_prime(p), ErrorKind::InvalidParameter, "GR needs a prime p, got " + std::to_string(p));
    require(n >= 1 && r >= 1, ErrorKind::InvalidParameter, "GR needs n, r >= 1");
    double size = 1;
    for (std::int64_t i = 0; i < n * r; ++i) size *= static_cast<double>(p);
    require(size <= static_cast<double>(kMaxRingOrder), ErrorKind::BudgetExceeded,
            "GR(" + std::to_string(p) + "^" + std::to_string(n) + "," + std::to_string(r) + ") is too large");

    const auto ur = static_cast<std::uint32_t>(r);
    const auto un = static_cast<std::uint32_t>(n);
    const auto hbar = smallest_primitive_polynomial(p, ur);
    const auto h = hensel_lift(hbar, p, un);
    const auto m = static_cast<std::int64_t>(detail::ipow(static_cast<std::uint64_t>(p), un));

    RingStructure s;
    s.orders.assign(ur, m);
    for (std::uint32_t i = 0; i < ur; ++i)
        s.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "xi" : "xi^" + std::to_string(i)));
    s.products.assign(ur, std::vector<std::vector<std::int64_t>>(ur));
    const auto xi = detail::x_class(h, m);
    std::vector<detail::Poly> powers(2 * ur);
    powers[0] = detail::Poly(ur, 0);
    powers[0][0] = 1;
    for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = detail::mulmod(powers[i - 1], xi, h, m);
    for (std::uint32_t i = 0; i < ur; ++i)
        for (std::uint32_t j = 0; j < ur; ++j) s.products[i][j] = powers[i + j];
    s.one = powers[0];

    GaloisData g{static_cast<std::uint32_t>(p), un, ur, h};
    const std::vector<std::int64_t>& xi_coords = xi;
    const std::string spec = "GR:" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(r);

    std::int64_t xi_index = 0;
    for (std::uint32_t i = ur; i-- > 0;) xi_index = xi_index * m + xi_coords[i];
    return std::make_shared<const Ring>(RingFamily::Galois, spec, std::move(s), std::move(g),
                                      static_cast<Elem>(xi_index));
}

namespace detail {

// (p, n) for GR(p^n, r), including Z_{p^n} as the case r = 1.
inline std::pair<std::uint32_t, std::uint32_t> padic_base(const Ring& R) {
    if (R.galois()) return {R.galois()->p, R.galois()->n};
    if (R.family() == RingFamily::IntegerModular) {
        const auto m = static_cast<std::uint64_t>(R.order());
        const auto primes = prime_factors(m);
        if (primes.size() == 1) {
            std::uint32_t n = 0;
            for (std::uint64_t k = m; k > 1; k /= primes[0]) ++n;
            return {static_cast<std::uint32_t>(primes[0]), n};
        }
    }
    fail(ErrorKind::WrongRingFamily, "p-adic digits need a Galois ring, got " + R.spec());
}

}  // namespace detail

/// The ring element sum_i p^i * digits[i].
inline Elem from_padic_digits(const Ring& R, std::span<const Elem> digits) {
    const auto p = static_cast<std::int64_t>(detail::padic_base(R).first);
    Elem acc = R.zero();
    Elem scale = R.one();
    for (Elem d : digits) {
        acc = R.add(acc, R.mul(scale, d));
        scale = R.mul(scale, R.from_int(p));
    }
    return acc;
}

/// Digits a_0..a_{n-1} in the Teichmüller set with a = sum p^i a_i.
inline std::vector<Elem> padic_digits(const Ring& R, const TeichmullerData& td, Elem a) {
    const auto [p, n] = detail::padic_base(R);
    std::vector<Elem> digits;
    digits.reserve(n);
    Elem rest = a;
    for (std::uint32_t i = 0; i < n; ++i) {
        const Elem d = td.nu[rest];
        digits.push_back(d);
        auto c = R.coords(R.sub(rest, d));
        for (auto& v : c) {
            if (v % p != 0) fail(ErrorKind::InternalInvariantViolation, "digit remainder not divisible by p");
            v /= p;
        }
        rest = R.from_coords(c);
    }
    return digits;
}

inline std::vector<Elem> padic_digits(const Ring& R, Elem a) { return padic_digits(R, teichmuller(R), a); }

}  // namespace homring
