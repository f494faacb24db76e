#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lambdap/bigint.hpp"
#include "lambdap/check.hpp"
#include "lambdap/residue_walk.hpp"

namespace lambdap {

// Where a bound is claimed to hold.
enum class Applicability {
    Asserted,           // p is inside the stated range: a failure is a violation
    OutsideStatedRange, // evaluated and reported, never fails a run
    NotApplicable,      // the quantity is undefined for this p
    ReportOnly,         // comparison without any claim attached
};

std::string_view to_string(Applicability a);

struct Verdict {
    bool holds = false;
    bool strict = true; // holds <=> margin > 0 (strict) or margin >= 0
    BigInt margin;      // exact slack of the cleared inequality
    Applicability applicability = Applicability::Asserted;
    std::string note;

    bool violated() const noexcept { return applicability == Applicability::Asserted && !holds; }
};

enum class BoundCheck : std::uint8_t {
    TheoremLower,
    TheoremUpper,
    Eq1Upper,
    McSpiritOnoUpper,
    ConstructionComparison,
    CUpper,
    CLower,
    C18,
};
inline constexpr std::size_t kBoundCheckCount = 8;

std::string_view to_string(BoundCheck check);

// floor((p^6 - 2p^5 + 2p^4 - 3p^2 + 2p) / 24)
BigInt mcspirit_ono_bound(std::int64_t p);
// Whether 24 divides the polynomial above (true for every prime).
bool mcspirit_ono_divisible(std::int64_t p);

// floor((p^6 - 4p^5 + 5p^4 + 12p^3 - 42p^2 + 52p - 24) / 24)
BigInt mcdowell_upper(std::int64_t p);
bool mcdowell_upper_divisible(std::int64_t p);

// (p^6 + 6p^4 - 12p^3 + 89p^2 - 120p - 48) / 96, exactly.
BigRational mcdowell_construction_value(std::int64_t p);

// Theorem range is p > 10^6.
inline constexpr std::int64_t kTheoremThreshold = 1'000'000;

struct IntervalVerdicts {
    Verdict lower; // p^6/24 - p^5 sqrt(p) < size
    Verdict upper; // size < p^6/24 - p^5 sqrt(p) / 200
};

// With L = p^6 - 24 size: lower <=> signed_square(L) < 576 p^11,
// upper <=> 625 signed_square(L) > 9 p^11.
IntervalVerdicts theorem_interval_check(std::int64_t p, const BigInt& size);

struct CBoundVerdicts {
    Verdict upper;         // c < (11/3) p sqrt(p), asserted for p >= 17
    Verdict lower;         // c > (6/5) p sqrt(p) - 16 p, asserted for p > 10^6
    Verdict at_p_over_18;  // c_{floor(p/18)} < (2/5) p sqrt(p) + p, asserted for p > 256
};

CBoundVerdicts c_bounds_check(const LambdaProfile& profile);

struct BoundsReport {
    std::int64_t p = 0;
    BigInt size;
    std::array<Verdict, kBoundCheckCount> verdicts;

    const Verdict& operator[](BoundCheck check) const { return verdicts[static_cast<std::size_t>(check)]; }
    Verdict& operator[](BoundCheck check) { return verdicts[static_cast<std::size_t>(check)]; }
    bool any_violated() const;
};

BoundsReport bounds_report(const LambdaProfile& profile);

// Per-residue inequalities for the class witnesses: the S-case strict
// two-sided bound and the T-case bound are asserted; the sharper remark
// statements are notes. For p <= direct_limit each pair is also compared
// with minimal_pair_direct (a mismatch is a failure).
CheckOutcome lemma_checks(const LambdaProfile& profile, std::int64_t direct_limit = 2000);

// phi(0..n) by a linear sieve.
std::vector<std::uint32_t> totient_table(std::uint32_t n);

// sum_{m <= n} phi(m) / m exactly.
BigRational totient_partial_sum(std::uint32_t n);

struct TotientCheckResult {
    bool holds = true;
    std::uint32_t n_max = 0;
    std::optional<std::uint32_t> first_violation;
    std::uint32_t min_slack_at = 0;
    // Exact slack sum - (3n/5 - 6) at min_slack_at when that index is small
    // enough for exact summation, otherwise empty.
    std::optional<BigRational> min_slack;
    std::string min_slack_text; // exact fraction or a bracketed decimal
    std::uint64_t exact_fallbacks = 0;
};

// Checks sum_{m <= n} phi(m)/m > 3n/5 - 6 for every n <= n_max. Each term is
// bracketed by floor and ceiling at scale 2^64, so the partial sum is known
// to lie in an exact integer interval; the verdict is decided from the
// interval, falling back to exact rational summation when it straddles the
// threshold.
TotientCheckResult totient_sum_check(std::uint32_t n_max);

} // namespace lambdap
