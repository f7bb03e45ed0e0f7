#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace advlab {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "a", "a/b" and a leading '-'. The result is always in lowest terms.
Rational parse_rational(std::string_view text);

// "a/b", or "a" for integral values.
std::string format_rational(const Rational& value);

Rational power(const Rational& base, unsigned exponent);
BigInt power(const BigInt& base, unsigned exponent);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

// Smallest k with 2^k >= value. value must be >= 1.
std::size_t ceil_log2(const BigInt& value);

// Number of bits needed to write value in binary (0 for value == 0).
std::size_t bit_length(const BigInt& value);

std::string to_string(const BigInt& value);

// Values as integer multiples of 1/denominator, denominator = lcm of the inputs'.
struct ScaledIntegers {
    std::vector<std::int64_t> values;
    std::int64_t denominator = 1;
};

// Throws ResourceExceeded if the denominator or any scaled value exceeds `limit`.
ScaledIntegers scale_to_common_denominator(std::span<const Rational> values, std::int64_t limit);

// Lossy, for human-readable report fields only.
double to_double(const Rational& value);

}  // namespace advlab
