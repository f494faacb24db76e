#include "lambdap/bigint.hpp"

#include <stdexcept>

namespace lambdap {

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string to_fraction_string(const BigRational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string decimal_ratio(const BigInt& num, const BigInt& den, unsigned digits)
{
    if (num < 0 || den <= 0) throw std::invalid_argument("decimal_ratio: need num >= 0 and den > 0");
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num, den, q, r);
    std::string out = q.str();
    if (digits == 0) return out;
    out.push_back('.');
    for (unsigned k = 0; k < digits; ++k) {
        r *= 10;
        BigInt d;
        boost::multiprecision::divide_qr(r, den, d, r);
        out.push_back(static_cast<char>('0' + d.convert_to<int>()));
    }
    return out;
}

BigInt signed_square(const BigInt& x) { return x < 0 ? BigInt(-(x * x)) : BigInt(x * x); }

BigInt pow_int(std::int64_t base, unsigned exponent)
{
    return boost::multiprecision::pow(BigInt(base), exponent);
}

} // namespace lambdap
