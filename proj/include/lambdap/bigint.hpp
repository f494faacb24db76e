#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lambdap {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigInt& value);

// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string to_fraction_string(const BigRational& value);

// Decimal expansion of num/den truncated (not rounded) to `digits` places.
// Requires num >= 0 and den > 0.
std::string decimal_ratio(const BigInt& num, const BigInt& den, unsigned digits);

// x * |x|: squaring that keeps the sign, so that comparisons of the form
// "x < k*sqrt(n)" reduce to "signed_square(x) < k^2 * n".
BigInt signed_square(const BigInt& x);

BigInt pow_int(std::int64_t base, unsigned exponent);

} // namespace lambdap
