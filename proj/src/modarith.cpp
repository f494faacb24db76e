#include "lambdap/modarith.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace lambdap {

ExtendedGcdResult egcd(std::int64_t a, std::int64_t b)
{
    if (a == 0 && b == 0) return {0, 0, 1};

    std::int64_t old_r = a, r = b;
    std::int64_t old_u = 1, u = 0;
    std::int64_t old_v = 0, v = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * u;
        old_u = u;
        u = t;
        t = old_v - q * v;
        old_v = v;
        v = t;
    }
    if (old_r < 0) return {-old_r, -old_u, -old_v};
    return {old_r, old_u, old_v};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n)
{
    if (n < 1) throw std::invalid_argument("inverse_mod: modulus must be positive");
    if (n == 1) return 0;
    const auto [g, u, v] = egcd(mod_floor(a, n), n);
    (void)v;
    if (g != 1) {
        throw std::invalid_argument("inverse_mod: " + std::to_string(a) + " is not invertible mod " +
                                    std::to_string(n));
    }
    return mod_floor(u, n);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    if (p < 2) throw std::invalid_argument("mod_inverse: modulus must be at least 2");
    if (mod_floor(a, p) == 0) {
        throw std::invalid_argument("mod_inverse: " + std::to_string(a) + " is divisible by " +
                                    std::to_string(p));
    }
    return inverse_mod(a, p);
}

std::uint64_t isqrt(std::uint64_t n)
{
    if (n < 2) return n;
    // 2^ceil(bits/2) is an upper bound on sqrt(n); Newton then decreases
    // monotonically to floor(sqrt(n)).
    const unsigned half = (static_cast<unsigned>(std::bit_width(n)) + 1) / 2;
    std::uint64_t x = std::uint64_t{1} << half;
    for (;;) {
        const std::uint64_t y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    using u128 = unsigned __int128;
    while (u128{x} * x > n) --x;
    while (u128{x + 1} * (x + 1) <= n) ++x;
    return x;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (const std::uint64_t q : kWitnesses) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (const std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned k = 1; k < s; ++k) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (is_prime(n)) out.push_back(n);
        if (n == UINT64_MAX) break;
    }
    return out;
}

std::vector<std::uint64_t> primes_after(std::uint64_t after, std::size_t count)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = after + 1; out.size() < count; ++n) {
        if (is_prime(n)) out.push_back(n);
    }
    return out;
}

} // namespace lambdap
