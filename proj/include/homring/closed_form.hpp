#pragma once

/**
 * @file closed_form.hpp
 * @brief Predicted spectra and weight enumerators for the code families.
 *
 * Families:
 *   frank-subring   GR(p^2, sk) over GR(p^2, s), q = p^s, k > 1
 *   frank           GR(p^2, r) over itself
 *   zp-power        x^d over Z_p, Hamming weight
 *   z2p-power       x^d over Z_{2p}, homogeneous weight
 *   sigma-quadratic sigma(a)a - sigma(a_m)a_m over a local ring R = S
 */

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "code.hpp"
#include "rational.hpp"

namespace homring {

enum class CodeFamily { FrankSubring, Frank, ZpPower, Z2pPower, SigmaQuadratic };

struct FamilyParams {
    // frank-subring: q, k.  frank: p, r.  zp/z2p-power: p, d.
    std::int64_t a = 0;
    std::int64_t b = 0;
    // sigma-quadratic: |R|, |M|, |K|.
    std::int64_t ring_order = 0;
    std::int64_t max_ideal_order = 0;
    std::int64_t residue_size = 0;
};

namespace detail {

inline Rational rpow(std::int64_t b, std::int64_t e) {
    Rational r(1);
    for (std::int64_t i = 0; i < e; ++i) r *= b;
    return r;
}

inline std::uint64_t to_count(const Rational& r) {
    if (!is_integer(r) || r < 0) fail(ErrorKind::InternalInvariantViolation, "closed form count is not a natural number");
    return static_cast<std::uint64_t>(boost::multiprecision::numerator(r));
}

inline void add_term(WeightEnumerator& e, const Rational& weight, const Rational& count) {
    const auto c = to_count(count);
    if (c != 0) e.counts[weight] += c;
}

inline bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    std::int64_t p = 2;
    while (q % p) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

}  // namespace detail

inline WeightEnumerator frank_subring_enumerator(std::int64_t q, std::int64_t k) {
    using detail::rpow;
    require(detail::is_prime_power(q) && k > 1, ErrorKind::OutOfRange, "frank-subring needs a prime power q and k > 1");
    const Rational qk = rpow(q, k);
    const Rational q2k = rpow(q, 2 * k);
    WeightEnumerator e;
    e.counts[Rational(0)] = 1;
    detail::add_term(e, q2k - qk, (qk - 1) * (rpow(q, 2 * k - 2) - rpow(q, k - 1) + qk));
    detail::add_term(e, q2k, (qk - 1) * (q2k - rpow(q, 2 * k - 1) + qk + 1));
    detail::add_term(e, q2k + qk / Rational(q - 1),
                     (qk - 1) * (rpow(q, 2 * k - 1) - qk - rpow(q, 2 * k - 2) + rpow(q, k - 1)));
    return e;
}

inline std::vector<Rational> frank_subring_spectrum(std::int64_t q, std::int64_t k) {
    using detail::rpow;
    require(detail::is_prime_power(q) && k > 1, ErrorKind::OutOfRange, "frank-subring needs a prime power q and k > 1");
    return {rpow(q, 2 * k), rpow(q, k), Rational(0), -rpow(q, k) / Rational(q - 1)};
}

inline WeightEnumerator frank_enumerator(std::int64_t p, std::int64_t r) {
    using detail::rpow;
    require(is_prime(p) && r >= 1, ErrorKind::OutOfRange, "frank needs a prime p and r >= 1");
    WeightEnumerator e;
    e.counts[Rational(0)] = 1;
    detail::add_term(e, rpow(p, 2 * r) - rpow(p, r), rpow(p, 2 * r) - rpow(p, r));
    detail::add_term(e, rpow(p, 2 * r), rpow(p, 3 * r) - rpow(p, 2 * r) + rpow(p, r) - 1);
    return e;
}

inline std::vector<Rational> frank_spectrum(std::int64_t p, std::int64_t r) {
    using detail::rpow;
    return {rpow(p, 2 * r), rpow(p, r), Rational(0)};
}

/// Hamming enumerator of C_{x^d} over Z_p.
inline WeightEnumerator zp_power_enumerator(std::int64_t p, std::int64_t d) {
    require(is_prime(p) && d >= 2 && d <= p - 1, ErrorKind::OutOfRange, "zp-power needs p prime and d in {2..p-1}");
    const std::int64_t l = std::gcd(d - 1, p - 1);
    WeightEnumerator e;
    e.kind = WeightKind::Hamming;
    e.gamma = Rational(p - 1, p);
    e.counts[Rational(0)] = 1;
    const Rational a = Rational((p - 1) * (p - 1), l);
    detail::add_term(e, Rational(p - l - 1), a);
    detail::add_term(e, Rational(p - 1), Rational(p * p - 1) - a);
    return e;
}

inline WeightEnumerator z2p_power_enumerator(std::int64_t p, std::int64_t d) {
    require(is_prime(p) && d >= 2 && d <= p - 1, ErrorKind::OutOfRange, "z2p-power needs p prime and d in {2..p-1}");
    const std::int64_t l = std::gcd(d - 1, p - 1);
    WeightEnumerator e;
    e.counts[Rational(0)] = 1;
    const Rational a = Rational((p - 1) * (p - 1), l);
    detail::add_term(e, Rational(2 * p * (p - 1 - l), p - 1), a);
    detail::add_term(e, Rational(2 * p), Rational(2 * p * p - 1) - a);
    return e;
}

inline std::vector<Rational> z2p_power_spectrum(std::int64_t p, std::int64_t d) {
    require(is_prime(p) && d >= 2 && d <= p - 1, ErrorKind::OutOfRange, "z2p-power needs p prime and d in {2..p-1}");
    const std::int64_t l = std::gcd(d - 1, p - 1);
    return {Rational(2 * p), Rational(2 * p * l, p - 1), Rational(0)};
}

/// |R|, |M|, |K| of a local ring R = S.
inline WeightEnumerator sigma_quadratic_enumerator(std::int64_t R, std::int64_t M, std::int64_t K) {
    require(R > 0 && M > 0 && K >= 2 && R == M * K, ErrorKind::OutOfRange, "sigma-quadratic needs |R| = |M||K|, |K| >= 2");
    WeightEnumerator e;
    e.counts[Rational(0)] = 1;
    if (K == 2) {
        detail::add_term(e, Rational(R, 2), Rational(R - 2));
        detail::add_term(e, Rational(R), Rational(R * R, 2) - R + 1);
        return e;
    }
    const std::int64_t units = R - M;
    detail::add_term(e, Rational(R - M), Rational(K * R - K * K + K - 1));
    detail::add_term(e, Rational(R) - Rational(R * M, units), Rational(K * K - 2 * K + 1));
    detail::add_term(e, Rational(R), Rational(R * R - K * R + K - 1));
    return e;
}

inline std::vector<Rational> sigma_quadratic_spectrum(std::int64_t R, std::int64_t M) {
    return {Rational(R), Rational(R * M, R - M), Rational(M), Rational(0)};
}

/// W(alpha, beta) as tabulated for the sigma-quadratic map on a local ring R = S.
inline Rational sigma_quadratic_predicted_W(const Ring& R, Elem alpha, Elem beta) {
    const Ideal& soc = R.socle();
    const auto n = static_cast<std::int64_t>(R.order());
    const auto m = static_cast<std::int64_t>(R.radical().size());
    const bool a_soc = soc.contains(alpha);
    const bool b_soc = soc.contains(beta);
    if (alpha == 0 && beta == 0) return Rational(n);
    if ((a_soc && !b_soc) || (a_soc && alpha != 0 && beta == 0)) return Rational(m);
    if (a_soc && b_soc && alpha != 0 && beta != 0) return Rational(n * m, n - m);
    return Rational(0);
}

inline WeightEnumerator closed_form_enumerator(CodeFamily family, const FamilyParams& p) {
    switch (family) {
        case CodeFamily::FrankSubring: return frank_subring_enumerator(p.a, p.b);
        case CodeFamily::Frank: return frank_enumerator(p.a, p.b);
        case CodeFamily::ZpPower: return zp_power_enumerator(p.a, p.b);
        case CodeFamily::Z2pPower: return z2p_power_enumerator(p.a, p.b);
        case CodeFamily::SigmaQuadratic:
            return sigma_quadratic_enumerator(p.ring_order, p.max_ideal_order, p.residue_size);
    }
    fail(ErrorKind::OutOfRange, "unknown family");
}

}  // namespace homring
