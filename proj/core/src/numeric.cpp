#include "indturan/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "indturan/error.hpp"

namespace indturan {

Count checked_add(Count a, Count b) {
    Count out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "128-bit count overflow in addition");
    return out;
}

Count checked_mul(Count a, Count b) {
    Count out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "128-bit count overflow in multiplication");
    return out;
}

std::string to_string(Count value) {
    if (value == 0) return "0";
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BigInt to_big(Count value) {
    BigInt hi = static_cast<std::uint64_t>(value >> 64);
    BigInt lo = static_cast<std::uint64_t>(value);
    return (hi << 64) | lo;
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw Error(ErrorCode::Usage, "not a number: '" + std::string(whole) + "'");
    BigInt out = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorCode::Usage, "not a number: '" + std::string(whole) + "'");
        out = out * 10 + (c - '0');
    }
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational out;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(body.substr(0, slash), text);
        BigInt den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) throw Error(ErrorCode::Usage, "zero denominator: '" + std::string(text) + "'");
        out = Rational(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
        BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
        BigInt scale = pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
        out = Rational(whole * scale + frac, scale);
    } else {
        out = Rational(parse_integer(body, text));
    }
    return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt pow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

Rational pow(const Rational& base, unsigned exponent) {
    BigInt num = boost::multiprecision::numerator(base);
    BigInt den = boost::multiprecision::denominator(base);
    return Rational(pow(num, exponent), pow(den, exponent));
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt floor(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) q -= 1;
    return q;
}

BigInt ceil(const Rational& value) {
    BigInt f = floor(value);
    return Rational(f) == value ? f : f + 1;
}

}  // namespace indturan
