#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers backed by Boost.Multiprecision.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "error.hpp"

namespace homring {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    require(den != 0, ErrorKind::InvalidParameter, "zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

/// Always "num/den", including integers ("12/1").
inline std::string to_fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Short form: "12" for integers, "81/2" otherwise.
inline std::string to_short_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
    return to_fraction_string(r);
}

/// Accepts "n", "-n", "n/d".
inline Rational parse_rational(std::string_view text) {
    auto digits_ok = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
        fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
    BigInt d(std::string(den.front() == '+' ? den.substr(1) : den));
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace homring
