#include <doctest.h>

#include <stdexcept>

#include "lambdap/bounds.hpp"
#include "lambdap/modarith.hpp"
#include "lambdap/residue_walk.hpp"

using namespace lambdap;

namespace {

BigInt expanded(std::int64_t p, std::initializer_list<std::int64_t> coeffs)
{
    // coefficients from the highest power down
    BigInt total = 0;
    unsigned power = static_cast<unsigned>(coeffs.size()) - 1;
    for (const auto c : coeffs) total += BigInt(c) * pow_int(p, power--);
    return total;
}

} // namespace

TEST_CASE("closed forms at small primes")
{
    CHECK(mcspirit_ono_bound(3) == 16);
    CHECK(mcspirit_ono_bound(5) == 440);
    CHECK(mcspirit_ono_bound(7) == 3696);
    CHECK(mcdowell_upper(3) == 10);
    CHECK(mcdowell_upper(5) == 289);
    CHECK(mcdowell_upper(7) == 2701);
    CHECK(mcdowell_construction_value(3) == BigRational(1284, 96));
    CHECK(mcdowell_construction_value(5) == BigRational(19452, 96));
    CHECK(mcdowell_construction_value(7) == BigRational(131412, 96));
    CHECK(to_fraction_string(mcdowell_construction_value(3)) == "107/8");
}

TEST_CASE("closed forms match their expanded polynomials")
{
    for (const auto up : primes_in_range(3, 3000)) {
        const auto p = static_cast<std::int64_t>(up);
        const BigInt so = expanded(p, {1, -2, 2, 0, -3, 2, 0});
        const BigInt mu = expanded(p, {1, -4, 5, 12, -42, 52, -24});
        const BigInt mc = expanded(p, {1, 0, 6, -12, 89, -120, -48});
        REQUIRE(so % 24 == 0);
        REQUIRE(mu % 24 == 0);
        REQUIRE(mcspirit_ono_divisible(p));
        REQUIRE(mcdowell_upper_divisible(p));
        REQUIRE(mcspirit_ono_bound(p) == so / 24);
        REQUIRE(mcdowell_upper(p) == mu / 24);
        REQUIRE(mcdowell_construction_value(p) == BigRational(mc, 96));
        REQUIRE(mcspirit_ono_bound(p) >= mcdowell_upper(p));
    }
}

TEST_CASE("size chain for primes below 600")
{
    for (const auto up : primes_in_range(3, 600)) {
        const auto p = static_cast<std::int64_t>(up);
        const auto prof = lambda_profile(p);
        REQUIRE(prof.size <= mcdowell_upper(p));
        REQUIRE(mcdowell_upper(p) <= mcspirit_ono_bound(p));
        const auto report = bounds_report(prof);
        REQUIRE_FALSE(report.any_violated());
        for (const auto& v : report.verdicts) {
            if (v.applicability == Applicability::NotApplicable) continue;
            // margin sign agrees with the verdict
            REQUIRE(v.holds == (v.strict ? v.margin > 0 : v.margin >= 0));
        }
    }
    CHECK(lambda_profile(3).size == mcdowell_upper(3));
}

TEST_CASE("theorem interval outside the stated range")
{
    const auto v = theorem_interval_check(5, 198);
    CHECK(v.lower.applicability == Applicability::OutsideStatedRange);
    CHECK(v.upper.applicability == Applicability::OutsideStatedRange);
    CHECK(v.lower.holds);
    // L = 15625 - 4752 = 10873; margin = 576 * 5^11 - L^2
    CHECK(v.lower.margin == BigInt(576) * pow_int(5, 11) - BigInt(10873) * 10873);
    CHECK_FALSE(v.lower.violated());
}

TEST_CASE("theorem interval at scale")
{
    const std::int64_t p = 1'000'003;
    const auto prof = lambda_profile(p);
    const auto v = theorem_interval_check(p, prof.size);
    CHECK(v.lower.applicability == Applicability::Asserted);
    CHECK(v.lower.holds);
    CHECK(v.upper.holds);

    // at or above p^6/24 the upper inequality must fail
    const BigInt p6 = pow_int(p, 6);
    const BigInt at_top = (p6 + 23) / 24;
    const auto synthetic = theorem_interval_check(p, at_top);
    CHECK_FALSE(synthetic.upper.holds);
    CHECK(synthetic.upper.violated());
    CHECK(synthetic.lower.holds);

    // far below the interval the lower inequality fails
    CHECK(theorem_interval_check(p, p6 / 48).lower.violated());

    // the construction value sits well below the computed maximum
    CHECK(mcdowell_construction_value(p) < BigRational(prof.size));
}

TEST_CASE("c bounds at small primes")
{
    const auto v = c_bounds_check(lambda_profile(5));
    CHECK(v.upper.holds);
    CHECK(v.upper.margin == 121 * 125 - 9 * 64);
    CHECK(v.upper.applicability == Applicability::OutsideStatedRange);
    CHECK(v.at_p_over_18.applicability == Applicability::NotApplicable);
    CHECK(v.lower.applicability == Applicability::OutsideStatedRange);

    const auto v17 = c_bounds_check(lambda_profile(17));
    CHECK(v17.upper.applicability == Applicability::Asserted);
    CHECK(v17.upper.holds);
    const auto v257 = c_bounds_check(lambda_profile(257));
    CHECK(v257.at_p_over_18.applicability == Applicability::Asserted);
    CHECK(v257.at_p_over_18.holds);
    const auto v251 = c_bounds_check(lambda_profile(251));
    CHECK(v251.at_p_over_18.applicability == Applicability::OutsideStatedRange);
}

TEST_CASE("lemma checks")
{
    for (const auto up : primes_in_range(3, 500)) {
        const auto outcome = lemma_checks(lambda_profile(static_cast<std::int64_t>(up)));
        REQUIRE(outcome.ok());
    }
}

TEST_CASE("totient sums")
{
    CHECK(totient_table(10) == std::vector<std::uint32_t>{0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4});
    CHECK(totient_partial_sum(10) == BigRational(1307, 210));
    CHECK(totient_partial_sum(1) == 1);

    const auto one = totient_sum_check(1);
    CHECK(one.holds);
    REQUIRE(one.min_slack.has_value());
    CHECK(*one.min_slack == BigRational(32, 5));
    CHECK(one.min_slack_text == "32/5");

    const auto four = totient_sum_check(4);
    CHECK(*four.min_slack == BigRational(94, 15));
    CHECK(four.min_slack_at == 4);

    const auto big = totient_sum_check(100000);
    CHECK(big.holds);
    CHECK_FALSE(big.first_violation.has_value());
    CHECK(big.min_slack_at == 6);
    CHECK(*big.min_slack == BigRational(31, 5));
    CHECK_THROWS_AS(totient_sum_check(0), std::invalid_argument);
}
