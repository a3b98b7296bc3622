#include "plqi/rational.hpp"

#include <stdexcept>

namespace plqi {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char ch : s)
        if (ch < '0' || ch > '9')
            return false;
    return true;
}

[[noreturn]] void reject(std::string_view text) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view numerator_part = text;
    std::string_view denominator_part;
    bool has_denominator = false;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        numerator_part = text.substr(0, slash);
        denominator_part = text.substr(slash + 1);
        has_denominator = true;
    }
    const bool negative = !numerator_part.empty() && numerator_part.front() == '-';
    const std::string_view digits = negative ? numerator_part.substr(1) : numerator_part;
    if (!all_digits(digits))
        reject(text);
    BigInt num{std::string(digits)};
    if (negative)
        num = -num;
    if (!has_denominator)
        return Rational(num);
    if (!all_digits(denominator_part) || denominator_part.front() == '0')
        reject(text);
    return Rational(num, BigInt(std::string(denominator_part)));
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

Rational rational_abs(const Rational& value) {
    return value < 0 ? Rational(-value) : value;
}

BigInt rational_floor(const Rational& value) {
    BigInt quotient = numerator(value) / denominator(value);
    if (numerator(value) < 0 && quotient * denominator(value) != numerator(value))
        --quotient;
    return quotient;
}

BigInt rational_ceil(const Rational& value) {
    return -rational_floor(-value);
}

}  // namespace plqi
