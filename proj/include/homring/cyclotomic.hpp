#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(omega_m).
 *
 * An element is a polynomial in omega = exp(2 pi i / m) with rational
 * coefficients, reduced modulo the m-th cyclotomic polynomial, so its
 * representation is canonical and has length phi(m).
 */

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace homring {

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
inline std::vector<std::int64_t> cyclotomic_poly(std::int64_t m) {
    require(m >= 1, ErrorKind::InvalidParameter, "cyclotomic polynomial needs m >= 1");
    // x^m - 1
    std::vector<std::int64_t> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d) continue;
        const auto div = cyclotomic_poly(d);
        // Exact division by a monic polynomial.
        const std::size_t dd = div.size() - 1;
        std::vector<std::int64_t> quot(num.size() - dd, 0);
        for (std::size_t i = num.size(); i-- > dd;) {
            const std::int64_t c = num[i];
            quot[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
        }
        for (std::size_t i = 0; i < dd; ++i)
            if (num[i] != 0) fail(ErrorKind::InternalInvariantViolation, "cyclotomic division not exact");
        num = std::move(quot);
    }
    return num;
}

class CyclotomicNumber {
   public:
    /// Zero in Q(omega_m).
    explicit CyclotomicNumber(std::int64_t m = 1) : m_(m), phi_(cyclotomic_poly(m)) {
        coeffs_.assign(phi_.size() - 1, Rational(0));
    }

    /// sum_k counts[k] omega^k for k in 0..counts.size()-1 (exponents taken mod m).
    static CyclotomicNumber from_exponent_counts(std::int64_t m, std::span<const std::int64_t> counts) {
        CyclotomicNumber z(m);
        std::vector<std::int64_t> poly(static_cast<std::size_t>(m), 0);
        for (std::size_t k = 0; k < counts.size(); ++k) poly[k % m] += counts[k];
        z.set_reduced(std::move(poly));
        return z;
    }

    static CyclotomicNumber root_power(std::int64_t m, std::int64_t e) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
        e %= m;
        if (e < 0) e += m;
        counts[e] = 1;
        return from_exponent_counts(m, counts);
    }

    static CyclotomicNumber from_rational(std::int64_t m, const Rational& r) {
        CyclotomicNumber z(m);
        z.coeffs_[0] = r;
        return z;
    }

    std::int64_t conductor() const { return m_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rational to_rational() const {
        if (!is_rational())
            fail(ErrorKind::NotRational, "cyclotomic number in Q(omega_" + std::to_string(m_) + ") is not rational");
        return coeffs_[0];
    }

    /// The same number expressed in Q(omega_L), L a multiple of the conductor.
    CyclotomicNumber lift(std::int64_t L) const {
        require(L % m_ == 0, ErrorKind::InvalidParameter, "lift target is not a multiple of the conductor");
        const std::int64_t step = L / m_;
        CyclotomicNumber z(L);
        std::vector<Rational> poly(static_cast<std::size_t>(L), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[(i * step) % L] += coeffs_[i];
        z.set_reduced_rational(std::move(poly));
        return z;
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.m_ != b.m_) {
            const std::int64_t L = std::lcm(a.m_, b.m_);
            return a.lift(L) + b.lift(L);
        }
        CyclotomicNumber z(a.m_);
        for (std::size_t i = 0; i < z.coeffs_.size(); ++i) z.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return z;
    }

    friend CyclotomicNumber operator-(const CyclotomicNumber& a) {
        CyclotomicNumber z = a;
        for (auto& c : z.coeffs_) c = -c;
        return z;
    }

    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.m_ != b.m_) {
            const std::int64_t L = std::lcm(a.m_, b.m_);
            return a.lift(L) * b.lift(L);
        }
        const std::size_t d = a.coeffs_.size();
        std::vector<Rational> prod(d == 0 ? 0 : 2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        CyclotomicNumber z(a.m_);
        z.set_reduced_rational(std::move(prod));
        return z;
    }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        if (a.m_ != b.m_) {
            const std::int64_t L = std::lcm(a.m_, b.m_);
            return a.lift(L).coeffs_ == b.lift(L).coeffs_;
        }
        return a.coeffs_ == b.coeffs_;
    }

   private:
    void set_reduced(std::vector<std::int64_t> poly) {
        const std::size_t d = phi_.size() - 1;
        for (std::size_t i = poly.size(); i-- > d;) {
            const std::int64_t c = poly[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= d; ++j) poly[i - d + j] -= c * phi_[j];
        }
        for (std::size_t i = 0; i < d && i < poly.size(); ++i) coeffs_[i] = Rational(poly[i]);
    }

    void set_reduced_rational(std::vector<Rational> poly) {
        const std::size_t d = phi_.size() - 1;
        for (std::size_t i = poly.size(); i-- > d;) {
            const Rational c = poly[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= d; ++j) poly[i - d + j] -= c * phi_[j];
        }
        for (std::size_t i = 0; i < d && i < poly.size(); ++i) coeffs_[i] = poly[i];
    }

    std::int64_t m_;
    std::vector<std::int64_t> phi_;
    std::vector<Rational> coeffs_;
};

}  // namespace homring
