#include "lambdap/lambdap.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "lambdap/bounds.hpp"
#include "lambdap/errors.hpp"
#include "lambdap/modarith.hpp"
#include "lambdap/oracle.hpp"
#include "lambdap/residue_walk.hpp"

struct lp_profile {
    lambdap::LambdaProfile value;
};

struct lp_bounds {
    lambdap::BoundsReport value;
};

namespace {

thread_local std::string g_last_error;

lp_status fail(lp_status status, std::string message)
{
    g_last_error = std::move(message);
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
lp_status guarded(F&& body) noexcept
{
    try {
        g_last_error.clear();
        return body();
    } catch (const lambdap::VerificationError& e) {
        return fail(LP_ERR_VERIFICATION, e.what());
    } catch (const lambdap::LimitError& e) {
        return fail(LP_ERR_LIMIT_EXCEEDED, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(LP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LP_ERR_LIMIT_EXCEEDED, "out of memory");
    } catch (const std::exception& e) {
        return fail(LP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LP_ERR_INTERNAL, "unknown exception");
    }
}

lp_status copy_string(const std::string& text, char* buf, size_t len, size_t* needed)
{
    if (needed) *needed = text.size() + 1;
    if (!buf || len < text.size() + 1) return fail(LP_ERR_BUFFER_TOO_SMALL, "buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return LP_OK;
}

// Optional message buffers are truncated rather than rejected.
void copy_truncated(const std::string& text, char* buf, size_t len)
{
    if (!buf || len == 0) return;
    const size_t n = std::min(text.size(), len - 1);
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
}

lp_status copy_values(const std::vector<std::int64_t>& values, int64_t* out, size_t len, size_t* count)
{
    if (count) *count = values.size();
    if (!out || len < values.size()) return fail(LP_ERR_BUFFER_TOO_SMALL, "buffer too small");
    std::copy(values.begin(), values.end(), out);
    return LP_OK;
}

std::int64_t checked_prime(uint64_t p)
{
    if (p > static_cast<uint64_t>(lambdap::kMaxWalkPrime)) throw std::invalid_argument("p is too large");
    return static_cast<std::int64_t>(p);
}

lp_verdict to_c(const lambdap::Verdict& v)
{
    lp_verdict out{};
    out.holds = v.holds ? 1 : 0;
    out.violated = v.violated() ? 1 : 0;
    out.applicability = static_cast<lp_applicability>(v.applicability);
    return out;
}

lp_minimal_pair to_c(const lambdap::MinimalPairRecord& rec, std::int64_t p)
{
    const auto bounds = lambdap::step_bounds(rec.i, p);
    lp_minimal_pair out{};
    out.i = rec.i;
    out.x = rec.x;
    out.y = rec.y;
    out.x_max = bounds.x_max;
    out.y_max = bounds.y_max;
    if (rec.entry) {
        out.cls = rec.entry->cls == lambdap::ResidueClass::S ? LP_CLASS_S : LP_CLASS_T;
        out.r = rec.entry->r;
        out.s = rec.entry->s;
    } else {
        out.cls = LP_CLASS_NONE;
    }
    return out;
}

} // namespace

extern "C" {

const char* lp_version(void) { return "0.1.0"; }

const char* lp_last_error(void) { return g_last_error.c_str(); }

const char* lp_status_name(lp_status status)
{
    switch (status) {
    case LP_OK: return "ok";
    case LP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LP_ERR_LIMIT_EXCEEDED: return "limit exceeded";
    case LP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case LP_ERR_VERIFICATION: return "verification failed";
    case LP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

int lp_is_prime(uint64_t n) { return lambdap::is_prime(n) ? 1 : 0; }

lp_status lp_profile_create(uint64_t p, lp_profile** out)
{
    return guarded([&] {
        if (!out) return fail(LP_ERR_INVALID_ARGUMENT, "null output handle");
        *out = nullptr;
        auto handle = std::make_unique<lp_profile>(lp_profile{lambdap::lambda_profile(checked_prime(p))});
        *out = handle.release();
        return LP_OK;
    });
}

void lp_profile_destroy(lp_profile* profile) { delete profile; }

uint64_t lp_profile_prime(const lp_profile* profile)
{
    return profile ? static_cast<uint64_t>(profile->value.p) : 0;
}

int64_t lp_profile_c(const lp_profile* profile) { return profile ? profile->value.c : 0; }

size_t lp_profile_length(const lp_profile* profile) { return profile ? profile->value.m.size() : 0; }

lp_status lp_profile_sequence(const lp_profile* profile, lp_sequence which, int64_t* out, size_t len)
{
    return guarded([&] {
        if (!profile || (!out && len > 0)) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
        const auto& prof = profile->value;
        const std::vector<std::int64_t>* seq = nullptr;
        switch (which) {
        case LP_SEQ_M: seq = &prof.m; break;
        case LP_SEQ_B: seq = &prof.b; break;
        case LP_SEQ_D: seq = &prof.d; break;
        case LP_SEQ_C_PREFIX: seq = &prof.c_prefix; break;
        default: return fail(LP_ERR_INVALID_ARGUMENT, "unknown sequence");
        }
        std::copy_n(seq->begin(), std::min(len, seq->size()), out);
        return LP_OK;
    });
}

lp_status lp_profile_size(const lp_profile* profile, char* buf, size_t len, size_t* needed)
{
    return guarded([&] {
        if (!profile) return fail(LP_ERR_INVALID_ARGUMENT, "null profile");
        return copy_string(lambdap::to_decimal(profile->value.size), buf, len, needed);
    });
}

lp_status lp_profile_ratio(const lp_profile* profile, unsigned digits, char* buf, size_t len, size_t* needed)
{
    return guarded([&] {
        if (!profile) return fail(LP_ERR_INVALID_ARGUMENT, "null profile");
        const auto& prof = profile->value;
        return copy_string(lambdap::decimal_ratio(24 * prof.size, lambdap::pow_int(prof.p, 6), digits), buf, len,
                           needed);
    });
}

lp_status lp_profile_minimal_pair(const lp_profile* profile, int64_t i, lp_minimal_pair* out)
{
    return guarded([&] {
        if (!profile || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
        const auto& prof = profile->value;
        if (i < 1 || i > prof.p - 2) return fail(LP_ERR_INVALID_ARGUMENT, "residue out of range");
        *out = to_c(prof.pairs[static_cast<size_t>(i - 1)], prof.p);
        return LP_OK;
    });
}

lp_status lp_profile_parts(const lp_profile* profile, uint64_t max_parts, int64_t* out, size_t len, size_t* count)
{
    return guarded([&] {
        if (!profile) return fail(LP_ERR_INVALID_ARGUMENT, "null profile");
        const auto lambda =
            lambdap::profile_to_partition(profile->value, max_parts == 0 ? lambdap::kDefaultMaxParts : max_parts);
        const auto parts = lambda.parts();
        return copy_values(std::vector<std::int64_t>(parts.begin(), parts.end()), out, len, count);
    });
}

lp_status lp_profile_walk(const lp_profile* profile, uint64_t max_vertices, int64_t* out, size_t len, size_t* count)
{
    return guarded([&] {
        if (!profile) return fail(LP_ERR_INVALID_ARGUMENT, "null profile");
        return copy_values(lambdap::walk_vertices(profile->value.p, profile->value.m, max_vertices), out, len, count);
    });
}

lp_status lp_minimal_pair_direct(uint64_t p, int64_t i, lp_minimal_pair* out)
{
    return guarded([&] {
        if (!out) return fail(LP_ERR_INVALID_ARGUMENT, "null output");
        const auto prime = checked_prime(p);
        if (!lambdap::is_prime(p) || prime < 3) return fail(LP_ERR_INVALID_ARGUMENT, "p must be an odd prime");
        *out = to_c(lambdap::minimal_pair_direct(i, prime), prime);
        return LP_OK;
    });
}

lp_status lp_profile_check_run(const lp_profile* profile, lp_profile_check which, lp_check_outcome* out,
                               char* message, size_t len)
{
    return guarded([&] {
        if (!profile || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
        const auto& prof = profile->value;
        lambdap::CheckOutcome outcome;
        switch (which) {
        case LP_CHECK_SYMMETRY: outcome = lambdap::check_symmetry(prof); break;
        case LP_CHECK_IDENTITY: outcome = lambdap::check_identities(prof); break;
        case LP_CHECK_STRUCTURE: {
            const auto walk = lambdap::validate_walk(prof);
            if (!walk.ok) outcome.fail(walk.violation->message);
            outcome.merge(lambdap::check_pair_records(prof));
            break;
        }
        case LP_CHECK_LEMMAS: outcome = lambdap::lemma_checks(prof); break;
        default: return fail(LP_ERR_INVALID_ARGUMENT, "unknown check");
        }
        out->holds = outcome.ok() ? 1 : 0;
        out->violations = outcome.violations();
        out->notes = outcome.note_count();
        copy_truncated(outcome.summary(), message, len);
        return LP_OK;
    });
}

lp_status lp_validate_walk(uint64_t p, const int64_t* m, size_t len, lp_walk_report* out)
{
    return guarded([&] {
        if (!out || (!m && len > 0)) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
        const auto report = lambdap::validate_walk(checked_prime(p), std::span<const std::int64_t>(m, len));
        *out = lp_walk_report{};
        out->ok = report.ok ? 1 : 0;
        out->residue_after_first_block = report.residue_after_first_block;
        out->final_residue = report.final_residue;
        if (report.violation) {
            out->violation = static_cast<lp_walk_violation>(static_cast<int>(report.violation->kind) + 1);
            out->label = report.violation->label;
            out->step = report.violation->step;
            g_last_error = report.violation->message;
        }
        return LP_OK;
    });
}

lp_status lp_bounds_create(const lp_profile* profile, lp_bounds** out)
{
    return guarded([&] {
        if (!profile || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
        *out = nullptr;
        auto handle = std::make_unique<lp_bounds>(lp_bounds{lambdap::bounds_report(profile->value)});
        *out = handle.release();
        return LP_OK;
    });
}

void lp_bounds_destroy(lp_bounds* bounds) { delete bounds; }

const char* lp_bound_check_name(lp_bound_check which)
{
    if (static_cast<unsigned>(which) >= LP_BOUND_CHECK_COUNT) return "unknown";
    return lambdap::to_string(static_cast<lambdap::BoundCheck>(which)).data();
}

lp_status lp_bounds_verdict(const lp_bounds* bounds, lp_bound_check which, lp_verdict* out)
{
    return guarded([&] {
        if (!bounds || !out) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
        if (static_cast<unsigned>(which) >= LP_BOUND_CHECK_COUNT) return fail(LP_ERR_INVALID_ARGUMENT, "unknown check");
        *out = to_c(bounds->value[static_cast<lambdap::BoundCheck>(which)]);
        return LP_OK;
    });
}

lp_status lp_bounds_margin(const lp_bounds* bounds, lp_bound_check which, char* buf, size_t len, size_t* needed)
{
    return guarded([&] {
        if (!bounds) return fail(LP_ERR_INVALID_ARGUMENT, "null bounds");
        if (static_cast<unsigned>(which) >= LP_BOUND_CHECK_COUNT) return fail(LP_ERR_INVALID_ARGUMENT, "unknown check");
        return copy_string(lambdap::to_decimal(bounds->value[static_cast<lambdap::BoundCheck>(which)].margin), buf, len,
                           needed);
    });
}

lp_status lp_closed_form_value(lp_closed_form which, uint64_t p, char* buf, size_t len, size_t* needed)
{
    return guarded([&] {
        const auto prime = checked_prime(p);
        switch (which) {
        case LP_FORM_MCSPIRIT_ONO: return copy_string(lambdap::to_decimal(lambdap::mcspirit_ono_bound(prime)), buf, len, needed);
        case LP_FORM_MCDOWELL_UPPER: return copy_string(lambdap::to_decimal(lambdap::mcdowell_upper(prime)), buf, len, needed);
        case LP_FORM_CONSTRUCTION:
            return copy_string(lambdap::to_fraction_string(lambdap::mcdowell_construction_value(prime)), buf, len, needed);
        }
        return fail(LP_ERR_INVALID_ARGUMENT, "unknown closed form");
    });
}

lp_status lp_theorem_interval(uint64_t p, const char* size_decimal, lp_verdict* lower, lp_verdict* upper)
{
    return guarded([&] {
        if (!size_decimal || !lower || !upper) return fail(LP_ERR_INVALID_ARGUMENT, "null argument");
        lambdap::BigInt size;
        try {
            size = lambdap::BigInt(size_decimal);
        } catch (const std::exception&) {
            return fail(LP_ERR_INVALID_ARGUMENT, "size is not a decimal integer");
        }
        const auto v = lambdap::theorem_interval_check(checked_prime(p), size);
        *lower = to_c(v.lower);
        *upper = to_c(v.upper);
        return LP_OK;
    });
}

lp_status lp_totient_check(uint32_t n_max, lp_totient_result* out, char* slack, size_t len)
{
    return guarded([&] {
        if (!out) return fail(LP_ERR_INVALID_ARGUMENT, "null output");
        const auto res = lambdap::totient_sum_check(n_max);
        out->holds = res.holds ? 1 : 0;
        out->n_max = res.n_max;
        out->first_violation = res.first_violation.value_or(0);
        out->min_slack_at = res.min_slack_at;
        copy_truncated(res.min_slack_text, slack, len);
        return LP_OK;
    });
}

lp_status lp_oracle_max_size_walk(uint64_t p, int64_t* m, size_t m_len, char* size, size_t size_len,
                                  lp_walk_summary* out)
{
    return guarded([&] {
        if (!out) return fail(LP_ERR_INVALID_ARGUMENT, "null output");
        if (p > static_cast<uint64_t>(lambdap::kWalkEnumerationCap)) {
            return fail(LP_ERR_LIMIT_EXCEEDED, "walk enumeration is capped at p <= 9");
        }
        std::uint64_t visited = lambdap::enumerate_valid_walks(static_cast<std::int64_t>(p), [](const auto&) {});
        const auto best = lambdap::max_size_walk(static_cast<std::int64_t>(p));
        out->length = best.length;
        out->optimal_count = 1;
        out->visited = visited;
        out->unique = 1;
        if (const lp_status st = copy_values(best.m, m, m_len, nullptr); st != LP_OK) return st;
        return copy_string(std::to_string(best.size), size, size_len, nullptr);
    });
}

lp_status lp_oracle_longest_walk(uint64_t p, int64_t* m, size_t m_len, lp_walk_summary* out)
{
    return guarded([&] {
        if (!out) return fail(LP_ERR_INVALID_ARGUMENT, "null output");
        if (p > static_cast<uint64_t>(lambdap::kLongestWalkDpCap)) {
            return fail(LP_ERR_LIMIT_EXCEEDED, "longest-walk DP is capped at p <= 500");
        }
        const auto res = lambdap::longest_walk_dp(static_cast<std::int64_t>(p));
        out->length = res.length;
        out->optimal_count = res.optimal_count;
        out->visited = 0;
        out->unique = res.optimal_count == 1 ? 1 : 0;
        return copy_values(res.m, m, m_len, nullptr);
    });
}

lp_status lp_oracle_partition_search(uint64_t p, int64_t size_cap, int64_t* parts, size_t len, size_t* count,
                                     uint64_t* searched)
{
    return guarded([&] {
        const auto res = lambdap::exhaustive_partition_search(checked_prime(p), size_cap);
        if (searched) *searched = res.searched;
        const auto span = res.best.parts();
        return copy_values(std::vector<std::int64_t>(span.begin(), span.end()), parts, len, count);
    });
}

} // extern "C"
