#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "pierce/errors.hpp"

namespace pierce {

// All coordinates and coefficients are exact rationals. cpp_rational keeps the
// value reduced (gcd(|num|, den) = 1) with a strictly positive denominator, so
// equality is structural.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& r) { return numerator(r); }
inline Int rational_den(const Rational& r) { return denominator(r); }

/// Largest integer <= r.
inline Int rational_floor(const Rational& r) {
    Int q = numerator(r) / denominator(r); // truncates toward zero
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// Renders as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    std::string s = rational_num(r).str();
    if (rational_den(r) != 1) s += "/" + rational_den(r).str();
    return s;
}

/// Parses "INT" or "INT/POSINT". Rejects zero or negative denominators.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw Error(Errc::parse_error, "bad rational '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (num.empty() || den.empty()) fail();
    }
    auto is_int = [](std::string_view t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!is_int(num, true) || !is_int(den, false)) fail();
    const Int n{std::string(num)};
    const Int d{std::string(den)};
    if (d <= 0) fail();
    return Rational(n, d);
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

} // namespace pierce
