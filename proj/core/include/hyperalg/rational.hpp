#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "hyperalg/error.hpp"

namespace hyperalg {

using Int = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision numerator/denominator.
/// Kept in canonical reduced form: denominator > 0, gcd(|num|, den) = 1.
/// boost::multiprecision::cpp_rational maintains exactly this normal form,
/// so we wrap it thinly and add the canonical `p/q` text grammar.
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rational_div(const Rational& a, const Rational& b) {
    if (b == 0) throw ArithmeticError("rational division by zero");
    return a / b;
}

/// Canonical text form: `p/q`, `/q` omitted when q = 1, sign on the
/// numerator, no whitespace. Examples: `-7`, `3/4`, `0`.
inline std::string rational_to_text(const Rational& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    std::string s = num.str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

namespace detail {

inline bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

/// Parses the canonical grammar above. `line`/`column` seed the error position.
inline Rational rational_from_text(std::string_view text, std::size_t line = 0, std::size_t column = 0) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!detail::valid_integer_token(num_part))
        throw ParseError("malformed rational numerator '" + std::string(text) + "'", line, column);
    if (num_part.front() == '+') num_part.remove_prefix(1);  // cpp_int rejects a leading '+'
    Int num{std::string(num_part)};
    Int den = 1;
    if (slash != std::string_view::npos) {
        std::string_view den_part = text.substr(slash + 1);
        // Canonical form puts the sign on the numerator only.
        if (den_part.empty() || den_part.front() == '+' || den_part.front() == '-' ||
            !detail::valid_integer_token(den_part))
            throw ParseError("malformed rational denominator '" + std::string(text) + "'", line,
                             column + slash + 1);
        den = Int(std::string(den_part));
        if (den == 0) throw ParseError("zero denominator", line, column + slash + 1);
    }
    return Rational(num, den);
}

}  // namespace hyperalg
