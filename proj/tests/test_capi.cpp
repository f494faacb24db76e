#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include "lambdap/lambdap.h"

namespace {

struct Profile {
    lp_profile* h = nullptr;
    explicit Profile(uint64_t p) { REQUIRE(lp_profile_create(p, &h) == LP_OK); }
    ~Profile() { lp_profile_destroy(h); }
};

std::string profile_size(const lp_profile* h)
{
    char buf[128];
    size_t needed = 0;
    REQUIRE(lp_profile_size(h, buf, sizeof buf, &needed) == LP_OK);
    return buf;
}

} // namespace

TEST_CASE("version and status names")
{
    CHECK(std::strlen(lp_version()) > 0);
    CHECK(std::string(lp_status_name(LP_OK)) == "ok");
    CHECK(lp_is_prime(1'000'003));
    CHECK_FALSE(lp_is_prime(1'000'001));
}

TEST_CASE("profile values")
{
    Profile prof(5);
    CHECK(lp_profile_prime(prof.h) == 5);
    CHECK(lp_profile_c(prof.h) == 8);
    REQUIRE(lp_profile_length(prof.h) == 4);
    std::vector<int64_t> m(4);
    REQUIRE(lp_profile_sequence(prof.h, LP_SEQ_M, m.data(), m.size()) == LP_OK);
    CHECK(m == std::vector<int64_t>{4, 2, 2, 3});
    REQUIRE(lp_profile_sequence(prof.h, LP_SEQ_C_PREFIX, m.data(), m.size()) == LP_OK);
    CHECK(m == std::vector<int64_t>{1, 4, 7, 9});
    CHECK(profile_size(prof.h) == "198");

    char ratio[32];
    REQUIRE(lp_profile_ratio(prof.h, 12, ratio, sizeof ratio, nullptr) == LP_OK);
    CHECK(std::string(ratio) == "0.304128000000");

    lp_minimal_pair pair{};
    REQUIRE(lp_profile_minimal_pair(prof.h, 1, &pair) == LP_OK);
    CHECK(pair.x == 1);
    CHECK(pair.y == 2);
    CHECK(pair.x_max == 1);
    CHECK(pair.y_max == 2);
    CHECK(lp_profile_minimal_pair(prof.h, 4, &pair) == LP_ERR_INVALID_ARGUMENT);

    REQUIRE(lp_minimal_pair_direct(11, 5, &pair) == LP_OK);
    CHECK(pair.x == 1);
    CHECK(pair.y == 1);
    CHECK(pair.cls == LP_CLASS_NONE);
}

TEST_CASE("buffer protocol")
{
    Profile prof(3);
    size_t needed = 0;
    CHECK(lp_profile_size(prof.h, nullptr, 0, &needed) == LP_ERR_BUFFER_TOO_SMALL);
    CHECK(needed == 3);
    char tiny[2];
    CHECK(lp_profile_size(prof.h, tiny, sizeof tiny, &needed) == LP_ERR_BUFFER_TOO_SMALL);
    CHECK(std::strlen(lp_last_error()) > 0);

    size_t count = 0;
    CHECK(lp_profile_parts(prof.h, 0, nullptr, 0, &count) == LP_ERR_BUFFER_TOO_SMALL);
    REQUIRE(count == 5);
    std::vector<int64_t> parts(count);
    REQUIRE(lp_profile_parts(prof.h, 0, parts.data(), parts.size(), &count) == LP_OK);
    CHECK(parts == std::vector<int64_t>{4, 2, 2, 1, 1});
    CHECK(lp_profile_parts(prof.h, 3, parts.data(), parts.size(), &count) == LP_ERR_LIMIT_EXCEEDED);

    std::vector<int64_t> walk(4);
    REQUIRE(lp_profile_walk(prof.h, 100, walk.data(), walk.size(), &count) == LP_OK);
    CHECK(walk == std::vector<int64_t>{0, 1, 2, 1});
}

TEST_CASE("argument errors")
{
    lp_profile* h = nullptr;
    CHECK(lp_profile_create(4, &h) == LP_ERR_INVALID_ARGUMENT);
    CHECK(h == nullptr);
    CHECK(std::strlen(lp_last_error()) > 0);
    CHECK(lp_profile_create(2, &h) == LP_ERR_INVALID_ARGUMENT);
    CHECK(lp_profile_create(4294967311ull, &h) == LP_ERR_INVALID_ARGUMENT);
    CHECK(lp_profile_create(5, nullptr) == LP_ERR_INVALID_ARGUMENT);
    CHECK(lp_profile_size(nullptr, nullptr, 0, nullptr) == LP_ERR_INVALID_ARGUMENT);
    lp_profile_destroy(nullptr);
    lp_bounds_destroy(nullptr);
}

TEST_CASE("structural checks")
{
    Profile prof(101);
    for (const auto which : {LP_CHECK_SYMMETRY, LP_CHECK_IDENTITY, LP_CHECK_STRUCTURE, LP_CHECK_LEMMAS}) {
        lp_check_outcome out{};
        char message[256];
        REQUIRE(lp_profile_check_run(prof.h, which, &out, message, sizeof message) == LP_OK);
        CHECK(out.holds == 1);
        CHECK(out.violations == 0);
        CHECK(std::string(message).empty());
    }
}

TEST_CASE("walk validation")
{
    const int64_t good[] = {4, 2, 2, 3};
    lp_walk_report report{};
    REQUIRE(lp_validate_walk(5, good, 4, &report) == LP_OK);
    CHECK(report.ok == 1);
    CHECK(report.residue_after_first_block == 4);
    CHECK(report.final_residue == 1);

    const int64_t tampered[] = {4, 1, 2, 3};
    REQUIRE(lp_validate_walk(5, tampered, 4, &report) == LP_OK);
    CHECK(report.ok == 0);
    CHECK(report.violation == LP_WALK_RETURNS_TO_ZERO);
    CHECK(report.label == 4);
}

TEST_CASE("bounds handle")
{
    Profile prof(5);
    lp_bounds* b = nullptr;
    REQUIRE(lp_bounds_create(prof.h, &b) == LP_OK);
    lp_verdict v{};
    REQUIRE(lp_bounds_verdict(b, LP_BOUND_EQ1_UPPER, &v) == LP_OK);
    CHECK(v.holds == 1);
    CHECK(v.applicability == LP_ASSERTED);
    char margin[64];
    REQUIRE(lp_bounds_margin(b, LP_BOUND_EQ1_UPPER, margin, sizeof margin, nullptr) == LP_OK);
    CHECK(std::string(margin) == std::to_string(24 * (289 - 198)));
    REQUIRE(lp_bounds_verdict(b, LP_BOUND_C18, &v) == LP_OK);
    CHECK(v.applicability == LP_NOT_APPLICABLE);
    REQUIRE(lp_bounds_verdict(b, LP_BOUND_CONSTRUCTION_COMPARISON, &v) == LP_OK);
    CHECK(v.applicability == LP_REPORT_ONLY);
    CHECK(v.holds == 0);
    CHECK(v.violated == 0);
    CHECK(std::string(lp_bound_check_name(LP_BOUND_THEOREM_LOWER)) == "theorem_lower");
    CHECK(lp_bounds_verdict(b, static_cast<lp_bound_check>(99), &v) == LP_ERR_INVALID_ARGUMENT);
    lp_bounds_destroy(b);
}

TEST_CASE("closed forms and theorem interval")
{
    char buf[64];
    REQUIRE(lp_closed_form_value(LP_FORM_MCSPIRIT_ONO, 5, buf, sizeof buf, nullptr) == LP_OK);
    CHECK(std::string(buf) == "440");
    REQUIRE(lp_closed_form_value(LP_FORM_MCDOWELL_UPPER, 5, buf, sizeof buf, nullptr) == LP_OK);
    CHECK(std::string(buf) == "289");
    REQUIRE(lp_closed_form_value(LP_FORM_CONSTRUCTION, 5, buf, sizeof buf, nullptr) == LP_OK);
    CHECK(std::string(buf) == "1621/8");

    lp_verdict lower{}, upper{};
    REQUIRE(lp_theorem_interval(5, "198", &lower, &upper) == LP_OK);
    CHECK(lower.holds == 1);
    CHECK(lower.applicability == LP_OUTSIDE_STATED_RANGE);
    CHECK(lp_theorem_interval(5, "19x", &lower, &upper) == LP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("totient and oracles")
{
    lp_totient_result t{};
    char slack[64];
    REQUIRE(lp_totient_check(1, &t, slack, sizeof slack) == LP_OK);
    CHECK(t.holds == 1);
    CHECK(std::string(slack) == "32/5");
    CHECK(lp_totient_check(0, &t, slack, sizeof slack) == LP_ERR_INVALID_ARGUMENT);

    std::vector<int64_t> m(6);
    char size[32];
    lp_walk_summary s{};
    REQUIRE(lp_oracle_max_size_walk(7, m.data(), m.size(), size, sizeof size, &s) == LP_OK);
    CHECK(m == std::vector<int64_t>{6, 2, 5, 5, 2, 5});
    CHECK(std::string(size) == "1726");
    CHECK(s.unique == 1);
    CHECK(s.length == 25);
    CHECK(lp_oracle_max_size_walk(23, m.data(), m.size(), size, sizeof size, &s) == LP_ERR_LIMIT_EXCEEDED);

    REQUIRE(lp_oracle_longest_walk(7, m.data(), m.size(), &s) == LP_OK);
    CHECK(s.optimal_count == 1);
    CHECK(m == std::vector<int64_t>{6, 2, 5, 5, 2, 5});

    std::vector<int64_t> parts(16);
    size_t count = 0;
    uint64_t searched = 0;
    REQUIRE(lp_oracle_partition_search(3, 16, parts.data(), parts.size(), &count, &searched) == LP_OK);
    parts.resize(count);
    CHECK(parts == std::vector<int64_t>{4, 2, 2, 1, 1});
    CHECK(searched > 0);
}
