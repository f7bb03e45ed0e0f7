#include "advlab/core/rational.hpp"

#include <cctype>

#include "advlab/core/errors.hpp"

namespace advlab {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    BigInt num = parse_integer(body.substr(0, slash), text);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational power(const Rational& base, unsigned exponent) {
    Rational result = 1;
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

BigInt power(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

BigInt floor(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

BigInt ceil(const Rational& value) {
    return -floor(-value);
}

std::size_t bit_length(const BigInt& value) {
    if (value <= 0) return 0;
    return boost::multiprecision::msb(value) + 1;
}

std::size_t ceil_log2(const BigInt& value) {
    if (value < 1) throw InvalidInput("ceil_log2 of a value below 1");
    return bit_length(value - 1);
}

std::string to_string(const BigInt& value) {
    return value.str();
}

ScaledIntegers scale_to_common_denominator(std::span<const Rational> values, std::int64_t limit) {
    BigInt lcm = 1;
    for (const auto& v : values) {
        lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(v)));
        if (lcm > limit) throw ResourceExceeded("common denominator exceeds the exact solver's range");
    }
    ScaledIntegers out;
    out.denominator = lcm.convert_to<std::int64_t>();
    out.values.reserve(values.size());
    for (const auto& v : values) {
        const Rational scaled = v * Rational(lcm);
        const BigInt s = boost::multiprecision::numerator(scaled);
        if (s > limit || s < -limit) throw ResourceExceeded("scaled value exceeds the exact solver's range");
        out.values.push_back(s.convert_to<std::int64_t>());
    }
    return out;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace advlab
