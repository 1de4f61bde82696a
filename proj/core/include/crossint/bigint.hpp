#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossint {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps values in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

/// C(m, r), or 0 when r < 0, r > m or m < 0.
BigInt binomial(long long m, long long r);

/// Word-sized binomial for m <= 64; same out-of-range convention.
std::uint64_t binomial_u64(int m, int r);

BigRational make_rational(const BigInt& num, const BigInt& den);

/// k^e for e >= 0.
BigInt ipow(long long base, int exponent);

std::string to_string(const BigInt& value);
/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const BigRational& value);

/// Accepts "p", "-p" or "p/q".
BigRational parse_rational(std::string_view text);

}  // namespace crossint
