#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lambdap/oracle.hpp"
#include "lambdap/partitions.hpp"

using namespace lambdap;

namespace {

std::vector<std::int64_t> sorted(std::vector<std::int64_t> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

const Partition kLambda3{{4, 2, 2, 1, 1}};

} // namespace

TEST_CASE("construction and text format")
{
    CHECK(Partition::parse("4,2,2,1,1") == kLambda3);
    CHECK(Partition::parse("").empty());
    CHECK(kLambda3.to_string() == "4,2,2,1,1");
    CHECK(kLambda3.size() == 10);
    CHECK(kLambda3.length() == 5);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition{}).empty());
    CHECK(conjugate(kLambda3) == Partition({5, 3, 1, 1}));
    for (std::int64_t n = 0; n <= 10; ++n) {
        for_each_partition(n, [](const Partition& l) { REQUIRE(conjugate(conjugate(l)) == l); });
    }
}

TEST_CASE("hook lengths")
{
    CHECK(hook_lengths(Partition({1})) == std::vector<std::int64_t>{1});
    CHECK(sorted(hook_lengths(Partition({2, 1}))) == std::vector<std::int64_t>{1, 1, 3});
    CHECK(sorted(hook_lengths(kLambda3)) == sorted({8, 5, 2, 1, 5, 2, 4, 1, 2, 1}));
}

TEST_CASE("hook multiset is transpose-invariant and has one entry per cell")
{
    for (std::int64_t n = 0; n <= 12; ++n) {
        for_each_partition(n, [n](const Partition& l) {
            const auto h = hook_lengths(l);
            REQUIRE(static_cast<std::int64_t>(h.size()) == n);
            REQUIRE(sorted(h) == sorted(hook_lengths(conjugate(l))));
        });
    }
}

TEST_CASE("p-core and p-regular predicates")
{
    CHECK(is_p_core(Partition{}, 3));
    CHECK_FALSE(is_p_core(Partition({2, 1}), 3));
    CHECK(is_p_core(kLambda3, 3));
    CHECK(is_p_regular(Partition{}, 7));
    CHECK(is_p_regular(kLambda3, 3));
    CHECK_FALSE(is_p_regular(Partition({5, 1}), 5));
    CHECK_THROWS_AS(is_p_core(kLambda3, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_p_regular(kLambda3, 0), std::invalid_argument);
}

TEST_CASE("partition counts")
{
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(10) == 42);
    CHECK(partition_count(16) == 231);
    std::uint64_t seen = 0;
    for_each_partition(12, [&](const Partition& l) {
        ++seen;
        REQUIRE(l.size() == 12);
    });
    CHECK(seen == 77);
}
