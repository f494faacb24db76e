#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lambdap/bigint.hpp"
#include "lambdap/partitions.hpp"

namespace lambdap {

// Bead positions on a p-runner abacus. Position q sits on runner q mod p in
// row q / p (0-based here). Position 0 is always a gap.
class AbacusDisplay {
public:
    // Throws std::invalid_argument on p < 2, negative or repeated positions,
    // or a bead at position 0.
    AbacusDisplay(std::int64_t p, std::vector<std::int64_t> beads);

    std::int64_t runners() const noexcept { return p_; }
    // Ascending.
    std::span<const std::int64_t> beads() const noexcept { return beads_; }
    bool has_bead(std::int64_t position) const;

    friend bool operator==(const AbacusDisplay&, const AbacusDisplay&) = default;

private:
    std::int64_t p_;
    std::vector<std::int64_t> beads_;
};

struct BeadMultiplicities {
    std::int64_t p = 0;
    std::vector<std::int64_t> b; // b[k] is the bead count on runner k + 1
};

// Beads at lambda_i + N - i (the first-column hook lengths), N = number of parts.
AbacusDisplay partition_to_abacus(const Partition& lambda, std::int64_t p);

// Each bead contributes the number of gaps before it; zero parts are dropped.
Partition abacus_to_partition(const AbacusDisplay& abacus);

// No bead has a gap directly above it on its runner.
bool is_top_aligned(const AbacusDisplay& abacus);

// No bead has a gap directly to its right within its row.
bool is_right_aligned(const AbacusDisplay& abacus);

// Requires a top-aligned display with runner 0 empty.
BeadMultiplicities bead_multiplicities(const AbacusDisplay& abacus);

// |lambda| = -(sum b)^2 / 2 + (p/2) sum b^2 + sum (i - (p-1)/2) b_i, evaluated
// as an exact doubled integer and halved. Throws std::invalid_argument when
// the value is negative or not integral.
BigInt size_from_bead_multiplicities(const BeadMultiplicities& mult);

} // namespace lambdap
