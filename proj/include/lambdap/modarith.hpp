#pragma once

#include <cstdint>
#include <vector>

namespace lambdap {

struct ExtendedGcdResult {
    std::int64_t g = 0; // gcd(|a|, |b|), never negative
    std::int64_t u = 0;
    std::int64_t v = 0; // u*a + v*b == g
};

// Extended Euclid. egcd(0, 0) is (0, 0, 1) by convention.
ExtendedGcdResult egcd(std::int64_t a, std::int64_t b);

// Inverse of a modulo n (n >= 1, gcd(a, n) == 1), reduced to [0, n).
// Throws std::invalid_argument when a is not invertible.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

// Inverse of a modulo the prime p, in 1..p-1. Rejects a == 0 (mod p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

// Least nonnegative residue of a mod n (n >= 1).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t n)
{
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// floor(sqrt(n)), computed with integer Newton iteration.
std::uint64_t isqrt(std::uint64_t n);

// Deterministic for every 64-bit input (Miller-Rabin over the first twelve
// prime bases, which has no pseudoprimes below 3.3e24).
bool is_prime(std::uint64_t n);

// All primes in [lo, hi] in increasing order; empty when lo > hi.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// The `count` smallest primes strictly greater than `after`.
std::vector<std::uint64_t> primes_after(std::uint64_t after, std::size_t count);

} // namespace lambdap
