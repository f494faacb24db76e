#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "lambdap/abacus.hpp"
#include "lambdap/errors.hpp"
#include "lambdap/modarith.hpp"
#include "lambdap/oracle.hpp"
#include "lambdap/residue_walk.hpp"

using namespace lambdap;
using Seq = std::vector<std::int64_t>;

TEST_CASE("walk enumeration at p = 2 and p = 3")
{
    bool saw_single = false;
    enumerate_valid_walks(2, [&](const WalkCandidate& w) {
        if (w.m == Seq{1}) {
            saw_single = true;
            CHECK(w.size == 1);
        }
        CHECK(w.m.size() == 1);
    });
    CHECK(saw_single);

    bool saw_lambda = false;
    bool saw_short = false;
    const auto visited = enumerate_valid_walks(3, [&](const WalkCandidate& w) {
        if (w.m == Seq{2, 1}) {
            saw_lambda = true;
            CHECK(w.size == 10);
            CHECK(w.length == 3);
        }
        if (w.m == Seq{2, 0}) {
            saw_short = true;
            CHECK(w.size == 6);
        }
    });
    CHECK(saw_lambda);
    CHECK(saw_short);
    CHECK(visited == 6);
}

TEST_CASE("walk enumeration guards")
{
    CHECK_THROWS_AS(enumerate_valid_walks(11, [](const WalkCandidate&) {}), LimitError);
    CHECK_THROWS_AS(enumerate_valid_walks(9, [](const WalkCandidate&) {}), std::invalid_argument);
    CHECK_THROWS_AS(longest_walk_dp(503), LimitError);
}

TEST_CASE("maximal-size walks")
{
    auto w = max_size_walk(3);
    CHECK(w.m == Seq{2, 1});
    CHECK(w.size == 10);
    w = max_size_walk(5);
    CHECK(w.m == Seq{4, 2, 2, 3});
    CHECK(w.size == 198);
    CHECK(w.length == 11);
    w = max_size_walk(7);
    CHECK(w.m == Seq{6, 2, 5, 5, 2, 5});
    CHECK(w.size == 1726);
    CHECK(w.length == 25);
    for (const std::int64_t p : {3, 5, 7}) {
        const auto prof = lambda_profile(p);
        const auto oracle = max_size_walk(p);
        CHECK(oracle.m == prof.m);
        CHECK(BigInt(oracle.size) == prof.size);
    }
}

TEST_CASE("longest-walk dynamic program")
{
    auto r = longest_walk_dp(3);
    CHECK(r.length == 3);
    CHECK(r.optimal_count == 1);
    CHECK(r.m == Seq{2, 1});
    r = longest_walk_dp(5);
    CHECK(r.length == 11);
    CHECK(r.optimal_count == 1);
    for (const std::int64_t p : {13, 101, 199}) {
        const auto prof = lambda_profile(p);
        r = longest_walk_dp(p);
        CHECK(r.optimal_count == 1);
        CHECK_FALSE(r.count_saturated);
        CHECK(r.m == prof.m);
        std::int64_t len = 0;
        for (const auto v : prof.m) len += v;
        CHECK(r.length == len);
    }
}

TEST_CASE("exhaustive partition search")
{
    auto r = exhaustive_partition_search(3, 16);
    CHECK(r.best == Partition({4, 2, 2, 1, 1}));
    CHECK(r.maximal_count == 1);
    r = exhaustive_partition_search(2, 3);
    CHECK(r.best == Partition({1}));
    r = exhaustive_partition_search(3, 9);
    CHECK(r.best.size() <= 9);
    CHECK(r.best == Partition({4, 2, 1, 1}));
    CHECK(is_p_core(r.best, 3));
    CHECK(is_p_regular(r.best, 3));
    CHECK_THROWS_AS(exhaustive_partition_search(5, 440), LimitError);
}

TEST_CASE("every enumerated walk yields a p-core p'-partition")
{
    for (const std::int64_t p : {5, 7}) {
        std::uint64_t checked = 0;
        enumerate_valid_walks(p, [&](const WalkCandidate& w) {
            const auto lambda = rows_to_partition(p, w.m);
            REQUIRE(lambda.size() == w.size);
            REQUIRE(is_p_core(lambda, p));
            REQUIRE(is_p_regular(lambda, p));
            const auto abacus = rows_to_abacus(p, w.m);
            REQUIRE(is_top_aligned(abacus));
            REQUIRE(is_right_aligned(abacus));
            ++checked;
        });
        CHECK(checked > 0);
    }
}
