#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace cattab {

using big_int = boost::multiprecision::cpp_int;

// Always kept in lowest terms with a positive denominator.
using rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

/// Parses "p/q" or a bare integer "p". Whitespace is not accepted.
inline rational parse_rational(std::string_view text)
{
    auto is_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer(num_text, true) || !is_integer(den_text, false)) {
        throw parse_error("not a rational of the form p/q: '" + std::string(text) + "'");
    }
    std::string num(num_text);
    if (num.front() == '+') num.erase(0, 1);
    const big_int n(num);
    const big_int d{std::string(den_text)};
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return rational(n, d);
}

/// base^exponent for any integer exponent; base must be non-zero when the
/// exponent is negative.
inline rational ipow(const rational& base, int exponent)
{
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("ipow: zero to a negative power");
        return ipow(1 / base, -exponent);
    }
    rational result = 1;
    rational factor = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result *= factor;
        if (e > 1) factor *= factor;
    }
    return result;
}

} // namespace cattab
