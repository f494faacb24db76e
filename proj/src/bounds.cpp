#include "lambdap/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "lambdap/errors.hpp"
#include "lambdap/modarith.hpp"

namespace lambdap {

std::string_view to_string(Applicability a)
{
    switch (a) {
    case Applicability::Asserted: return "asserted";
    case Applicability::OutsideStatedRange: return "outside-stated-range";
    case Applicability::NotApplicable: return "not-applicable";
    case Applicability::ReportOnly: return "report-only";
    }
    return "?";
}

std::string_view to_string(BoundCheck check)
{
    switch (check) {
    case BoundCheck::TheoremLower: return "theorem_lower";
    case BoundCheck::TheoremUpper: return "theorem_upper";
    case BoundCheck::Eq1Upper: return "eq1_upper";
    case BoundCheck::McSpiritOnoUpper: return "mcspirit_ono_upper";
    case BoundCheck::ConstructionComparison: return "construction_comparison";
    case BoundCheck::CUpper: return "c_upper";
    case BoundCheck::CLower: return "c_lower";
    case BoundCheck::C18: return "c18";
    }
    return "?";
}

namespace {

// Horner evaluation, coefficients from the leading term down.
BigInt horner(std::int64_t p, std::initializer_list<std::int64_t> coeffs)
{
    BigInt acc = 0;
    for (const std::int64_t c : coeffs) acc = acc * p + c;
    return acc;
}

BigInt mcspirit_ono_poly(std::int64_t p) { return horner(p, {1, -2, 2, 0, -3, 2, 0}); }
BigInt mcdowell_poly(std::int64_t p) { return horner(p, {1, -4, 5, 12, -42, 52, -24}); }
BigInt construction_poly(std::int64_t p) { return horner(p, {1, 0, 6, -12, 89, -120, -48}); }

BigInt floor_div(const BigInt& a, std::int64_t d)
{
    BigInt q = a / d;
    if (a < 0 && q * d != a) --q;
    return q;
}

Verdict strict_verdict(BigInt margin, Applicability a, std::string note = {})
{
    Verdict v;
    v.holds = margin > 0;
    v.strict = true;
    v.margin = std::move(margin);
    v.applicability = a;
    v.note = std::move(note);
    return v;
}

Verdict weak_verdict(BigInt margin, Applicability a, std::string note = {})
{
    Verdict v = strict_verdict(std::move(margin), a, std::move(note));
    v.holds = v.margin >= 0;
    v.strict = false;
    return v;
}

Applicability range(bool inside) { return inside ? Applicability::Asserted : Applicability::OutsideStatedRange; }

} // namespace

BigInt mcspirit_ono_bound(std::int64_t p)
{
    if (p < 2) throw std::invalid_argument("mcspirit_ono_bound: p must be at least 2");
    return floor_div(mcspirit_ono_poly(p), 24);
}

bool mcspirit_ono_divisible(std::int64_t p) { return mcspirit_ono_poly(p) % 24 == 0; }

BigInt mcdowell_upper(std::int64_t p)
{
    if (p < 3) throw std::invalid_argument("mcdowell_upper: p must be at least 3");
    return floor_div(mcdowell_poly(p), 24);
}

bool mcdowell_upper_divisible(std::int64_t p) { return mcdowell_poly(p) % 24 == 0; }

BigRational mcdowell_construction_value(std::int64_t p)
{
    if (p < 3) throw std::invalid_argument("mcdowell_construction_value: p must be at least 3");
    return BigRational(construction_poly(p), BigInt(96));
}

IntervalVerdicts theorem_interval_check(std::int64_t p, const BigInt& size)
{
    const BigInt p11 = pow_int(p, 11);
    const BigInt ell = pow_int(p, 6) - 24 * size;
    const BigInt ell_sq = signed_square(ell);
    const bool inside = p > kTheoremThreshold;
    const std::string note = inside ? std::string{} : "stated for p > 10^6";
    return {
        strict_verdict(576 * p11 - ell_sq, range(inside), note),
        strict_verdict(625 * ell_sq - 9 * p11, range(inside), note),
    };
}

CBoundVerdicts c_bounds_check(const LambdaProfile& prof)
{
    const std::int64_t p = prof.p;
    const BigInt p3 = pow_int(p, 3);
    const BigInt c = prof.c;

    CBoundVerdicts out;
    out.upper = strict_verdict(121 * p3 - 9 * c * c, range(p >= 17), p >= 17 ? "" : "stated for p >= 17");
    out.lower = strict_verdict(signed_square(5 * c + 80 * BigInt(p)) - 36 * p3, range(p > kTheoremThreshold),
                               p > kTheoremThreshold ? "" : "asserted only for p > 10^6");
    const std::int64_t k = p / 18;
    if (k < 1) {
        out.at_p_over_18.applicability = Applicability::NotApplicable;
        out.at_p_over_18.note = "floor(p/18) = 0";
    } else {
        const BigInt ck = prof.c_prefix[static_cast<std::size_t>(k - 1)];
        out.at_p_over_18 = strict_verdict(4 * p3 - 25 * signed_square(ck - p), range(p > 256),
                                          p > 256 ? "" : "stated for p > 256");
    }
    return out;
}

bool BoundsReport::any_violated() const
{
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.violated(); });
}

BoundsReport bounds_report(const LambdaProfile& prof)
{
    const std::int64_t p = prof.p;
    BoundsReport rep;
    rep.p = p;
    rep.size = prof.size;
    const BigInt scaled = 24 * prof.size;

    auto [lower, upper] = theorem_interval_check(p, prof.size);
    rep[BoundCheck::TheoremLower] = std::move(lower);
    rep[BoundCheck::TheoremUpper] = std::move(upper);

    rep[BoundCheck::Eq1Upper] = weak_verdict(mcdowell_poly(p) - scaled, Applicability::Asserted,
                                             mcdowell_upper_divisible(p) ? "" : "bound polynomial not divisible by 24");
    rep[BoundCheck::McSpiritOnoUpper] =
        weak_verdict(mcspirit_ono_poly(p) - scaled, Applicability::Asserted,
                     mcspirit_ono_divisible(p) ? "" : "bound polynomial not divisible by 24");
    rep[BoundCheck::ConstructionComparison] =
        weak_verdict(96 * prof.size - construction_poly(p), Applicability::ReportOnly, "size minus construction value, x96");

    auto cb = c_bounds_check(prof);
    rep[BoundCheck::CUpper] = std::move(cb.upper);
    rep[BoundCheck::CLower] = std::move(cb.lower);
    rep[BoundCheck::C18] = std::move(cb.at_p_over_18);
    return rep;
}

CheckOutcome lemma_checks(const LambdaProfile& prof, std::int64_t direct_limit)
{
    CheckOutcome out;
    const std::int64_t p = prof.p;
    for (const MinimalPairRecord& pr : prof.pairs) {
        const std::string at = " at i=" + std::to_string(pr.i);
        if (!pr.entry) {
            out.fail("missing class witness" + at);
            continue;
        }
        const std::int64_t r = pr.entry->r;
        const std::int64_t s = pr.entry->s;
        const std::int64_t sum = pr.x + pr.y;
        if (pr.entry->cls == ResidueClass::S) {
            const std::int64_t big = std::max(r, s);
            const std::int64_t small = std::min(r, s);
            // p/big < x + y < p/big + big - 1, cleared by big
            if (!(big * sum > p)) out.fail("S-case lower bound fails" + at);
            if (!(big * sum < p + big * big - big)) out.fail("S-case upper bound fails" + at);
            if (!(big * sum < p + big * big - big * small)) out.note("sharper S-case bound fails" + at);
            if (s * pr.x + r * pr.y != p) out.note("s x + r y != p" + at);
        } else {
            if (!(sum <= r + s)) out.fail("T-case bound fails" + at);
            if (pr.x != r || pr.y != s) out.note("(x_i, y_i) != (r, s)" + at);
        }
        if (p <= direct_limit) {
            const MinimalPairRecord direct = minimal_pair_direct(pr.i, p);
            if (direct.x != pr.x || direct.y != pr.y) out.fail("closed form disagrees with direct search" + at);
        }
    }
    return out;
}

std::vector<std::uint32_t> totient_table(std::uint32_t n)
{
    std::vector<std::uint32_t> phi(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint32_t> primes;
    if (n >= 1) phi[1] = 1;
    for (std::uint32_t k = 2; k <= n; ++k) {
        if (phi[k] == 0) {
            phi[k] = k - 1;
            primes.push_back(k);
        }
        for (const std::uint32_t q : primes) {
            const std::uint64_t kq = std::uint64_t{k} * q;
            if (kq > n) break;
            if (k % q == 0) {
                phi[kq] = phi[k] * q;
                break;
            }
            phi[kq] = phi[k] * (q - 1);
        }
    }
    return phi;
}

BigRational totient_partial_sum(std::uint32_t n)
{
    const auto phi = totient_table(n);
    BigRational sum = 0;
    for (std::uint32_t m = 1; m <= n; ++m) sum += BigRational(BigInt(phi[m]), BigInt(m));
    return sum;
}

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::uint32_t kExactPrefix = 200;

BigRational totient_slack(const BigRational& sum, std::uint32_t n)
{
    return sum - BigRational(BigInt(3) * n, BigInt(5)) + 6;
}

} // namespace

TotientCheckResult totient_sum_check(std::uint32_t n_max)
{
    if (n_max < 1) throw std::invalid_argument("totient_sum_check: n_max must be positive");
    TotientCheckResult res;
    res.n_max = n_max;
    const auto phi = totient_table(n_max);

    // Exact tracking on a short prefix, where the minimum slack lives.
    BigRational exact_sum = 0;
    std::optional<BigRational> exact_min;
    std::uint32_t exact_min_at = 0;

    u128 lo = 0; // floor sum at scale 2^64
    u128 hi = 0; // ceiling sum at scale 2^64
    i128 min_scaled_slack = 0;
    std::uint32_t min_scaled_at = 0;

    for (std::uint32_t n = 1; n <= n_max; ++n) {
        const u128 scaled = u128{phi[n]} << 64;
        const u128 floor_term = scaled / n;
        lo += floor_term;
        hi += floor_term + (scaled % n != 0 ? 1 : 0);

        const i128 threshold = (i128{3} * n - 30) * (i128{1} << 64); // (3n - 30) * 2^64
        const i128 lo5 = 5 * static_cast<i128>(lo);
        const i128 hi5 = 5 * static_cast<i128>(hi);
        bool holds = false;
        if (lo5 > threshold) {
            holds = true;
        } else if (hi5 <= threshold) {
            holds = false;
        } else {
            ++res.exact_fallbacks;
            holds = totient_slack(totient_partial_sum(n), n) > 0;
        }
        if (!holds && res.holds) {
            res.holds = false;
            res.first_violation = n;
        }

        if (n <= kExactPrefix) {
            exact_sum += BigRational(BigInt(phi[n]), BigInt(n));
            BigRational slack = totient_slack(exact_sum, n);
            if (!exact_min || slack < *exact_min) {
                exact_min = slack;
                exact_min_at = n;
            }
        } else {
            const i128 slack_lo = lo5 - threshold; // lower bracket of 5 * 2^64 * slack
            if (min_scaled_at == 0 || slack_lo < min_scaled_slack) {
                min_scaled_slack = slack_lo;
                min_scaled_at = n;
            }
        }
    }

    res.min_slack_at = exact_min_at;
    res.min_slack = exact_min;
    res.min_slack_text = to_fraction_string(*exact_min);
    if (min_scaled_at != 0) {
        // Compare the bracket's lower bound against the exact prefix minimum.
        const BigInt scaled_exact =
            boost::multiprecision::numerator(*exact_min) * 5 * (BigInt(1) << 64) /
            boost::multiprecision::denominator(*exact_min);
        BigInt tail = static_cast<std::int64_t>(min_scaled_slack >> 64);
        tail <<= 64;
        tail += static_cast<std::uint64_t>(min_scaled_slack & ~std::uint64_t{0});
        if (tail <= scaled_exact + 5 * BigInt(n_max)) {
            // The tail minimum may undercut the prefix minimum; report the bracket instead.
            res.min_slack_at = min_scaled_at;
            res.min_slack.reset();
            res.min_slack_text = ">= " + decimal_ratio(tail < 0 ? BigInt(0) : tail, 5 * (BigInt(1) << 64), 12) +
                                 " (bracketed)";
        }
    }
    return res;
}

} // namespace lambdap
