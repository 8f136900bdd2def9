#ifndef HAARGAP_RATIONAL_HPP
#define HAARGAP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace haargap {

/// Arbitrary-precision exact rational. Every quantity outside the
/// numerical validation module is one of these.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Canonical "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& q)
{
    return q.str();
}

inline Rational positive_part(const Rational& q)
{
    return q > 0 ? q : Rational(0);
}

inline Rational abs(const Rational& q)
{
    return q < 0 ? Rational(-q) : q;
}

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline Integer parse_integer(std::string_view s, std::string_view whole)
{
    s = trim(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InvalidArgument("not a rational literal: '" + std::string(whole) + "'");
    // cpp_int reads a leading 0 as an octal prefix; decimal only here.
    const auto first = s.find_first_not_of('0');
    Integer value{first == std::string_view::npos ? std::string("0") : std::string(s.substr(first))};
    return negative ? Integer(-value) : value;
}

} // namespace detail

/// Parses "p", "p/q" or a terminating decimal such as "-0.25".
inline Rational parse_rational(std::string_view text)
{
    const auto s = detail::trim(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const Integer num = detail::parse_integer(s.substr(0, slash), text);
        const Integer den = detail::parse_integer(s.substr(slash + 1), text);
        if (den == 0)
            throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string digits(s.substr(0, dot));
        const auto frac = s.substr(dot + 1);
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos)
            throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
        digits += frac;
        if (digits.empty() || digits == "-" || digits == "+")
            throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
        Integer den = 1;
        for (std::size_t k = 0; k < frac.size(); ++k)
            den *= 10;
        return Rational(detail::parse_integer(digits, text), den);
    }
    return Rational(detail::parse_integer(s, text));
}

/// Comma-separated list of rational literals.
inline std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace haargap

#endif // HAARGAP_RATIONAL_HPP
