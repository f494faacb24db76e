#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "lambdap/abacus.hpp"
#include "lambdap/oracle.hpp"

using namespace lambdap;

namespace {

const Partition kLambda3{{4, 2, 2, 1, 1}};
const std::vector<std::int64_t> kPrimes{2, 3, 5, 7};

std::vector<std::int64_t> beads_of(const AbacusDisplay& a)
{
    return {a.beads().begin(), a.beads().end()};
}

} // namespace

TEST_CASE("display validation")
{
    CHECK_THROWS_AS(AbacusDisplay(3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(AbacusDisplay(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(AbacusDisplay(3, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(AbacusDisplay(1, {}), std::invalid_argument);
    const AbacusDisplay a(3, {8, 1, 5});
    CHECK(beads_of(a) == std::vector<std::int64_t>{1, 5, 8});
    CHECK(a.has_bead(5));
    CHECK_FALSE(a.has_bead(4));
}

TEST_CASE("partition_to_abacus")
{
    CHECK(partition_to_abacus(Partition{}, 3).beads().empty());
    CHECK(beads_of(partition_to_abacus(kLambda3, 3)) == std::vector<std::int64_t>{1, 2, 4, 5, 8});
    CHECK(beads_of(partition_to_abacus(Partition({1}), 2)) == std::vector<std::int64_t>{1});
}

TEST_CASE("abacus_to_partition")
{
    CHECK(abacus_to_partition(AbacusDisplay(3, {})).empty());
    CHECK(abacus_to_partition(AbacusDisplay(3, {8, 5, 4, 2, 1})) == kLambda3);
    // position 0 is a gap, so each of these beads has exactly one gap before it
    CHECK(abacus_to_partition(AbacusDisplay(3, {1, 2, 3})) == Partition({1, 1, 1}));
    // gaps at 3 and 4 lift the last part
    CHECK(abacus_to_partition(AbacusDisplay(3, {1, 2, 5})) == Partition({3, 1, 1}));
}

TEST_CASE("alignment predicates")
{
    CHECK(is_top_aligned(AbacusDisplay(3, {})));
    CHECK(is_top_aligned(AbacusDisplay(3, {8, 5, 4, 2, 1})));
    CHECK_FALSE(is_top_aligned(AbacusDisplay(3, {4})));
    CHECK(is_right_aligned(AbacusDisplay(3, {})));
    CHECK(is_right_aligned(AbacusDisplay(3, {8, 5, 4, 2, 1})));
    CHECK_FALSE(is_right_aligned(AbacusDisplay(3, {1})));
}

TEST_CASE("bead multiplicities")
{
    CHECK(bead_multiplicities(AbacusDisplay(3, {})).b == std::vector<std::int64_t>{0, 0});
    CHECK(bead_multiplicities(AbacusDisplay(3, {8, 5, 4, 2, 1})).b == std::vector<std::int64_t>{2, 3});
    CHECK(bead_multiplicities(AbacusDisplay(5, {1, 2, 3, 4})).b == std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK_THROWS_AS(bead_multiplicities(AbacusDisplay(3, {4})), std::invalid_argument);
    CHECK_THROWS_AS(bead_multiplicities(AbacusDisplay(3, {3})), std::invalid_argument);
}

TEST_CASE("size from bead multiplicities")
{
    CHECK(size_from_bead_multiplicities({3, {0, 0}}) == 0);
    CHECK(size_from_bead_multiplicities({3, {2, 3}}) == 10);
    CHECK(size_from_bead_multiplicities({5, {4, 6, 8, 11}}) == 198);
    CHECK_THROWS_AS(size_from_bead_multiplicities({3, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(size_from_bead_multiplicities({3, {1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("round trip through the abacus for n <= 15")
{
    for (const auto p : kPrimes) {
        for (std::int64_t n = 0; n <= 15; ++n) {
            for_each_partition(n, [p](const Partition& l) {
                REQUIRE(abacus_to_partition(partition_to_abacus(l, p)) == l);
            });
        }
    }
}

TEST_CASE("top alignment characterises p-cores and the size formula holds on them")
{
    for (const auto p : kPrimes) {
        for (std::int64_t n = 0; n <= 12; ++n) {
            for_each_partition(n, [p](const Partition& l) {
                const auto a = partition_to_abacus(l, p);
                const bool core = is_p_core(l, p);
                REQUIRE(core == is_top_aligned(a));
                if (!core) return;
                // position 0 is a gap, so top alignment leaves runner 0 empty
                REQUIRE(size_from_bead_multiplicities(bead_multiplicities(a)) == l.size());
            });
        }
    }
}

TEST_CASE("alignment alone does not force a p'-partition")
{
    // aligned, runner 0 empty, but the second row's gap count reaches p
    const AbacusDisplay a(2, {1, 3});
    CHECK(is_top_aligned(a));
    CHECK(is_right_aligned(a));
    CHECK(abacus_to_partition(a) == Partition({2, 1}));
    CHECK_FALSE(is_p_regular(abacus_to_partition(a), 2));
}

TEST_CASE("aligned displays give p'-partitions exactly when no gap count is divisible by p")
{
    for (const auto p : kPrimes) {
        for (std::int64_t n = 0; n <= 12; ++n) {
            for_each_partition(n, [p](const Partition& l) {
                const auto a = partition_to_abacus(l, p);
                if (!is_top_aligned(a) || !is_right_aligned(a)) return;
                // gaps before each bead, scanning positions in order
                bool divisible = false;
                std::int64_t gaps = 0;
                const auto beads = a.beads();
                for (std::int64_t q = 0, k = 0; k < static_cast<std::int64_t>(beads.size()); ++q) {
                    if (beads[k] == q) {
                        divisible = divisible || gaps % p == 0;
                        ++k;
                    } else {
                        ++gaps;
                    }
                }
                REQUIRE(is_p_regular(l, p) == !divisible);
            });
        }
    }
}
