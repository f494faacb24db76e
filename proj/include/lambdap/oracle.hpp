#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lambdap/partitions.hpp"

namespace lambdap {

// Brute-force ground truth for small p. Nothing here calls into the
// residue-walk construction; the oracles only share the partition predicates.

inline constexpr std::int64_t kWalkEnumerationCap = 9;
inline constexpr std::int64_t kLongestWalkDpCap = 500;
inline constexpr std::uint64_t kPartitionSearchBudget = 20'000'000;

struct WalkCandidate {
    std::vector<std::int64_t> m; // m[k] edges with label k + 1
    std::int64_t length = 0;
    std::int64_t size = 0; // size of the aligned-abacus partition
};

using WalkVisitor = std::function<void(const WalkCandidate&)>;

// Depth-first over label counts; every valid walk is visited exactly once.
// Returns the number of walks visited.
std::uint64_t enumerate_valid_walks(std::int64_t p, const WalkVisitor& visit,
                                    std::int64_t cap = kWalkEnumerationCap);

// The unique valid walk of maximal partition size; it must also be the
// unique walk of maximal length (VerificationError otherwise).
WalkCandidate max_size_walk(std::int64_t p);

struct LongestWalkResult {
    std::int64_t length = 0;
    std::uint64_t optimal_count = 0;
    bool count_saturated = false; // optimal_count reached UINT64_MAX
    std::vector<std::int64_t> m;
};

// Dynamic program over (label, residue) states. Throws VerificationError
// when more than one walk attains the maximal length.
LongestWalkResult longest_walk_dp(std::int64_t p);

// Number of partitions of n (exact, LimitError on 64-bit overflow).
std::uint64_t partition_count(std::int64_t n);

// Every partition of n, in reverse lexicographic order.
void for_each_partition(std::int64_t n, const std::function<void(const Partition&)>& visit);

struct PartitionSearchResult {
    Partition best;
    std::size_t maximal_count = 0; // partitions attaining best.size()
    std::uint64_t searched = 0;
};

// Largest p-core p'-partition of size <= size_cap. VerificationError if the
// maximum is attained twice; LimitError when the enumeration would exceed
// `budget` partitions.
PartitionSearchResult exhaustive_partition_search(std::int64_t p, std::int64_t size_cap,
                                                  std::uint64_t budget = kPartitionSearchBudget);

} // namespace lambdap
