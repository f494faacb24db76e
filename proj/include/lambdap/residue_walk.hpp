#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lambdap/abacus.hpp"
#include "lambdap/bigint.hpp"
#include "lambdap/check.hpp"
#include "lambdap/partitions.hpp"

namespace lambdap {

// Largest prime modulus accepted by the residue-walk routines; keeps every
// product of two residues inside int64 and witnesses inside int32.
inline constexpr std::int64_t kMaxWalkPrime = (std::int64_t{1} << 31) - 1;

// Default cap on the number of parts emitted by profile_to_partition.
inline constexpr std::uint64_t kDefaultMaxParts = 20'000'000;

// x_max: steps from p-1 to 0 along label i (inverse of i).
// y_max: steps from 0 to p-1 along label i+1 (inverse of -(i+1)).
struct StepBounds {
    std::int64_t i = 0;
    std::int64_t x_max = 0;
    std::int64_t y_max = 0;
};

enum class ResidueClass : std::uint8_t { S, T };

// i = s/(r-s) mod p (class S) or i = -s/(r+s) mod p (class T), with
// coprime 0 < r, s < sqrt(p).
struct ClassEntry {
    ResidueClass cls = ResidueClass::T;
    std::int32_t r = 0;
    std::int32_t s = 0;

    friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

// Positive (x, y) with i*x + (i+1)*y = 0 mod p, x <= x_max, y <= y_max and
// x + y minimal. `entry` is empty for records produced by direct search.
struct MinimalPairRecord {
    std::int64_t i = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::optional<ClassEntry> entry;
};

// Row multiplicities m, bead multiplicities b, subtractions d = p - m, their
// prefix sums c_prefix, the total c = sum (x_i + y_i), and |Lambda_p|.
// Sequences are stored 0-based: m[k] is m_{k+1}. pairs[k] is (x_{k+1}, y_{k+1}).
struct LambdaProfile {
    std::int64_t p = 0;
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> d;
    std::vector<std::int64_t> c_prefix;
    std::int64_t c = 0;
    BigInt size;
    std::vector<MinimalPairRecord> pairs;
};

StepBounds step_bounds(std::int64_t i, std::int64_t p);

// Reference search: scans t = x + y upward. O(p) per residue.
MinimalPairRecord minimal_pair_direct(std::int64_t i, std::int64_t p);

// Entry k describes residue i = k + 1. S witnesses take priority over T.
// Throws VerificationError if some residue has no witness or two distinct
// witnesses of the same class.
std::vector<ClassEntry> classify_residues(std::int64_t p);

// Closed form from the residue's class witness. O(log p).
MinimalPairRecord minimal_pair_fast(std::int64_t i, const ClassEntry& entry, std::int64_t p);

// Builds the profile of the longest valid walk with the fast path and checks
// every structural identity before returning (VerificationError otherwise).
LambdaProfile lambda_profile(std::int64_t p);

// Congruence and range conditions of every stored minimal pair.
CheckOutcome check_pair_records(const LambdaProfile& profile);
// (x_i, y_i) = (y_{p-1-i}, x_{p-1-i}) and m_i = m_{p-i}.
CheckOutcome check_symmetry(const LambdaProfile& profile);
// Prefix-sum relations, end values, c_i + c_{p-1-i} = c, c_{p-1} = c + 1 and
// 2 * sum b_i = p^2 (p-1) - p c - 2.
CheckOutcome check_identities(const LambdaProfile& profile);

// Parts for rows grouped by label in increasing order: m_i rows of (p - i)
// equal parts, valued at the running label sum. LimitError past max_parts.
Partition rows_to_partition(std::int64_t p, std::span<const std::int64_t> m,
                            std::uint64_t max_parts = kDefaultMaxParts);
Partition profile_to_partition(const LambdaProfile& profile, std::uint64_t max_parts = kDefaultMaxParts);

// Aligned abacus of a walk: each row is `label` gaps followed by beads.
AbacusDisplay rows_to_abacus(std::int64_t p, std::span<const std::int64_t> m);

struct WalkViolation {
    enum class Kind { BadLength, ReturnsToZero, MissedBoundary, WrongFinalResidue };
    Kind kind = Kind::BadLength;
    std::int64_t label = 0;
    std::int64_t step = 0; // 1-based step inside the label's block, 0 if not applicable
    std::string message;
};

struct WalkReport {
    bool ok = false;
    std::optional<WalkViolation> violation;
    std::int64_t residue_after_first_block = 0;
    std::int64_t final_residue = 0;
};

// Replays the walk block by block (O(log p) per label): it must never return
// to 0, must sit at p-1 after the label-1 block, must pass through p-1 inside
// every later block, and must end at 1.
WalkReport validate_walk(std::int64_t p, std::span<const std::int64_t> m);
WalkReport validate_walk(const LambdaProfile& profile);

// Visited residues, starting with 0. LimitError if longer than max_vertices.
std::vector<std::int64_t> walk_vertices(std::int64_t p, std::span<const std::int64_t> m,
                                        std::uint64_t max_vertices = 1'000'000);

} // namespace lambdap
