#include "lambdap/abacus.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace lambdap {

AbacusDisplay::AbacusDisplay(std::int64_t p, std::vector<std::int64_t> beads)
    : p_(p), beads_(std::move(beads))
{
    if (p_ < 2) throw std::invalid_argument("AbacusDisplay: need at least two runners");
    std::sort(beads_.begin(), beads_.end());
    if (!beads_.empty() && beads_.front() < 0) {
        throw std::invalid_argument("AbacusDisplay: negative bead position");
    }
    if (!beads_.empty() && beads_.front() == 0) {
        throw std::invalid_argument("AbacusDisplay: position 0 must be a gap");
    }
    if (std::adjacent_find(beads_.begin(), beads_.end()) != beads_.end()) {
        throw std::invalid_argument("AbacusDisplay: repeated bead position");
    }
}

bool AbacusDisplay::has_bead(std::int64_t position) const
{
    return std::binary_search(beads_.begin(), beads_.end(), position);
}

AbacusDisplay partition_to_abacus(const Partition& lambda, std::int64_t p)
{
    const auto n = static_cast<std::int64_t>(lambda.length());
    std::vector<std::int64_t> beads;
    beads.reserve(lambda.length());
    for (std::int64_t i = 0; i < n; ++i) {
        beads.push_back(lambda[static_cast<std::size_t>(i)] + n - i - 1);
    }
    return AbacusDisplay{p, std::move(beads)};
}

Partition abacus_to_partition(const AbacusDisplay& abacus)
{
    std::vector<std::int64_t> parts;
    const auto beads = abacus.beads();
    for (std::size_t k = beads.size(); k-- > 0;) {
        const std::int64_t part = beads[k] - static_cast<std::int64_t>(k);
        if (part > 0) parts.push_back(part);
    }
    return Partition{std::move(parts)};
}

bool is_top_aligned(const AbacusDisplay& abacus)
{
    const std::int64_t p = abacus.runners();
    return std::all_of(abacus.beads().begin(), abacus.beads().end(),
                       [&](std::int64_t q) { return q < p || abacus.has_bead(q - p); });
}

bool is_right_aligned(const AbacusDisplay& abacus)
{
    const std::int64_t p = abacus.runners();
    return std::all_of(abacus.beads().begin(), abacus.beads().end(),
                       [&](std::int64_t q) { return q % p == p - 1 || abacus.has_bead(q + 1); });
}

BeadMultiplicities bead_multiplicities(const AbacusDisplay& abacus)
{
    const std::int64_t p = abacus.runners();
    if (!is_top_aligned(abacus)) {
        throw std::invalid_argument("bead_multiplicities: display is not top-aligned");
    }
    BeadMultiplicities out{p, std::vector<std::int64_t>(static_cast<std::size_t>(p - 1), 0)};
    for (const std::int64_t q : abacus.beads()) {
        const std::int64_t runner = q % p;
        if (runner == 0) throw std::invalid_argument("bead_multiplicities: bead on runner 0");
        ++out.b[static_cast<std::size_t>(runner - 1)];
    }
    return out;
}

namespace {

// Doubled size, accumulated in Acc. Returns nullopt if an __int128 step
// overflows, so the caller can redo the sum in arbitrary precision.
template <typename Acc>
std::optional<Acc> doubled_size(const BeadMultiplicities& mult);

template <>
std::optional<__int128> doubled_size<__int128>(const BeadMultiplicities& mult)
{
    const __int128 p = mult.p;
    __int128 sum = 0, sum_sq = 0, linear = 0;
    for (std::size_t k = 0; k < mult.b.size(); ++k) {
        const __int128 b = mult.b[k];
        const __int128 weight = 2 * static_cast<__int128>(k + 1) - (p - 1);
        __int128 sq = 0, lin = 0;
        if (__builtin_mul_overflow(b, b, &sq) || __builtin_add_overflow(sum, b, &sum) ||
            __builtin_add_overflow(sum_sq, sq, &sum_sq) || __builtin_mul_overflow(weight, b, &lin) ||
            __builtin_add_overflow(linear, lin, &linear)) {
            return std::nullopt;
        }
    }
    __int128 a = 0, c = 0, out = 0;
    if (__builtin_mul_overflow(sum, sum, &a) || __builtin_mul_overflow(p, sum_sq, &c) ||
        __builtin_sub_overflow(c, a, &out) || __builtin_add_overflow(out, linear, &out)) {
        return std::nullopt;
    }
    return out;
}

template <>
std::optional<BigInt> doubled_size<BigInt>(const BeadMultiplicities& mult)
{
    BigInt sum = 0, sum_sq = 0, linear = 0;
    for (std::size_t k = 0; k < mult.b.size(); ++k) {
        const BigInt b = mult.b[k];
        sum += b;
        sum_sq += b * b;
        linear += (2 * BigInt(k + 1) - (mult.p - 1)) * b;
    }
    return BigInt(mult.p * sum_sq - sum * sum + linear);
}

BigInt from_int128(__int128 v)
{
    const bool negative = v < 0;
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-out) : out;
}

} // namespace

BigInt size_from_bead_multiplicities(const BeadMultiplicities& mult)
{
    if (mult.p < 2 || mult.b.size() != static_cast<std::size_t>(mult.p - 1)) {
        throw std::invalid_argument("size_from_bead_multiplicities: need exactly p - 1 multiplicities");
    }
    BigInt doubled;
    if (auto fast = doubled_size<__int128>(mult)) {
        doubled = from_int128(*fast);
    } else {
        doubled = *doubled_size<BigInt>(mult);
    }
    if (doubled < 0) throw std::invalid_argument("size_from_bead_multiplicities: negative size");
    if ((doubled & 1) != 0) throw std::invalid_argument("size_from_bead_multiplicities: non-integral size");
    return doubled >> 1;
}

} // namespace lambdap
