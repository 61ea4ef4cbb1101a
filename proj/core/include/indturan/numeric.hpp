#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace indturan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Walk and cycle counts. Arithmetic on Count goes through the checked helpers
// below, which throw Error(Overflow) instead of wrapping.
using Count = unsigned __int128;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
std::string to_string(Count value);
BigInt to_big(Count value);

// Accepts "p/q", integers and finite decimals ("0.25"); the result is exact.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

BigInt pow(const BigInt& base, unsigned exponent);
Rational pow(const Rational& base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

// Smallest integer >= value.
BigInt ceil(const Rational& value);
BigInt floor(const Rational& value);

}  // namespace indturan
