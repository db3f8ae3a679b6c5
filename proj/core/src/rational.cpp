#include "tropfw/rational.hpp"

#include "tropfw/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace tropfw {

namespace {

using Integer = boost::multiprecision::mpz_int;

bool is_plain_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    if (!is_plain_integer(s))
        throw ParseError("invalid integer '" + std::string(s) + "' in '" +
                         std::string(whole) + "'");
    bool negative = s[0] == '-';
    if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
    Integer value{std::string(s)};
    return negative ? Integer(-value) : value;
}

Integer pow10(unsigned long exp) {
    return boost::multiprecision::pow(Integer(10), exp);
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trimmed(text);
    if (s.empty()) throw ParseError("empty numeric field");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(s.substr(0, slash), s);
        Integer den = parse_integer(s.substr(slash + 1), s);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        return Rational(num) / Rational(den);
    }

    // [sign] digits [. digits] [eE [sign] digits], at least one mantissa digit
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';

    std::string mantissa;
    std::size_t frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw ParseError("invalid number '" + std::string(s) + "'");

    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        std::string_view tail = s.substr(i + 1);
        if (!is_plain_integer(tail))
            throw ParseError("invalid exponent in '" + std::string(s) + "'");
        exponent = parse_integer(tail, s).convert_to<long>();
        i = s.size();
    }
    if (i != s.size()) throw ParseError("invalid number '" + std::string(s) + "'");

    Integer m{mantissa.empty() ? "0" : mantissa};
    if (negative) m = -m;
    long scale10 = exponent - static_cast<long>(frac_digits);
    if (scale10 >= 0) return Rational(m * pow10(static_cast<unsigned long>(scale10)));
    return Rational(m, pow10(static_cast<unsigned long>(-scale10)));
}

Rational round_to_decimal(double value, int digits) {
    if (!std::isfinite(value))
        throw std::invalid_argument("round_to_decimal: value must be finite");
    if (digits < 0)
        throw std::invalid_argument("round_to_decimal: digits must be >= 0");

    const Rational exact{value};  // doubles are dyadic, conversion is lossless
    const Integer scale = pow10(static_cast<unsigned long>(digits));
    const Rational scaled = exact * scale;

    Integer num = numerator(scaled), den = denominator(scaled);  // den > 0
    Integer q = num / den, r = num % den;                        // truncated
    if (r < 0) {  // shift to floor division: remainder in [0, den)
        q -= 1;
        r += den;
    }
    const Integer twice = 2 * r;
    if (twice > den || (twice == den && (q % 2) != 0)) q += 1;  // ties to even
    return Rational(q, scale);
}

std::string to_fraction_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace tropfw
