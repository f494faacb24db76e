#include "lambdap/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "lambdap/errors.hpp"
#include "lambdap/modarith.hpp"

namespace lambdap {

namespace {

// Smallest k >= 1 with v + k * label = 0 (mod p), by stepping.
std::int64_t steps_to_zero(std::int64_t v, std::int64_t label, std::int64_t p)
{
    std::int64_t k = 1;
    std::int64_t w = (v + label) % p;
    while (w != 0) {
        w = (w + label) % p;
        ++k;
    }
    return k;
}

void require_small_p(std::int64_t p, std::int64_t cap, const char* who)
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw std::invalid_argument(std::string(who) + ": p must be prime, got " + std::to_string(p));
    }
    if (p > cap) {
        throw LimitError(std::string(who) + ": p = " + std::to_string(p) + " exceeds the cap " + std::to_string(cap));
    }
}

std::string walk_text(const std::vector<std::int64_t>& m)
{
    std::string out = "(";
    for (std::size_t k = 0; k < m.size(); ++k) out += (k ? "," : "") + std::to_string(m[k]);
    return out + ")";
}

} // namespace

std::uint64_t enumerate_valid_walks(std::int64_t p, const WalkVisitor& visit, std::int64_t cap)
{
    require_small_p(p, cap, "enumerate_valid_walks");
    WalkCandidate cur;
    cur.m.assign(static_cast<std::size_t>(p - 1), 0);
    std::uint64_t visited = 0;

    // label, current residue, running label sum w
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> dfs = [&](std::int64_t label, std::int64_t v,
                                                                             std::int64_t w) {
        if (label == p) {
            ++visited;
            visit(cur);
            return;
        }
        const std::int64_t limit = steps_to_zero(v, label, p);
        const std::int64_t saved_len = cur.length;
        const std::int64_t saved_size = cur.size;
        std::int64_t vv = v;
        std::int64_t ww = w;
        for (std::int64_t k = 0; k < limit; ++k) {
            if (k > 0) {
                vv = (vv + label) % p;
                ww += label;
                cur.size += (p - label) * ww;
                ++cur.length;
            }
            cur.m[static_cast<std::size_t>(label - 1)] = k;
            dfs(label + 1, vv, ww);
        }
        cur.m[static_cast<std::size_t>(label - 1)] = 0;
        cur.length = saved_len;
        cur.size = saved_size;
    };
    dfs(1, 0, 0);
    return visited;
}

WalkCandidate max_size_walk(std::int64_t p)
{
    WalkCandidate best_size;
    WalkCandidate best_length;
    std::size_t size_ties = 0;
    std::size_t length_ties = 0;
    bool first = true;
    enumerate_valid_walks(p, [&](const WalkCandidate& w) {
        if (first || w.size > best_size.size) {
            best_size = w;
            size_ties = 1;
        } else if (w.size == best_size.size) {
            ++size_ties;
        }
        if (first || w.length > best_length.length) {
            best_length = w;
            length_ties = 1;
        } else if (w.length == best_length.length) {
            ++length_ties;
        }
        first = false;
    });
    if (size_ties != 1) {
        throw VerificationError("max_size_walk(" + std::to_string(p) + "): maximal size attained by " +
                                std::to_string(size_ties) + " walks");
    }
    if (length_ties != 1) {
        throw VerificationError("max_size_walk(" + std::to_string(p) + "): maximal length attained by " +
                                std::to_string(length_ties) + " walks");
    }
    if (best_size.m != best_length.m) {
        throw VerificationError("max_size_walk(" + std::to_string(p) + "): size maximizer " + walk_text(best_size.m) +
                                " differs from length maximizer " + walk_text(best_length.m));
    }
    return best_size;
}

LongestWalkResult longest_walk_dp(std::int64_t p)
{
    require_small_p(p, kLongestWalkDpCap, "longest_walk_dp");
    const auto np = static_cast<std::size_t>(p);
    constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

    // best[label][v]: most edges obtainable from residue v using labels >= label.
    // Row p is the terminal row (no labels left).
    std::vector<std::vector<std::int64_t>> best(np + 1, std::vector<std::int64_t>(np, 0));
    std::vector<std::vector<std::uint64_t>> ways(np + 1, std::vector<std::uint64_t>(np, 1));
    std::vector<std::vector<std::int64_t>> choice(np + 1, std::vector<std::int64_t>(np, 0));
    bool saturated = false;

    for (std::int64_t label = p - 1; label >= 1; --label) {
        const auto li = static_cast<std::size_t>(label);
        for (std::int64_t v = 0; v < p; ++v) {
            const std::int64_t limit = steps_to_zero(v, label, p);
            std::int64_t top = -1;
            std::uint64_t count = 0;
            std::int64_t arg = 0;
            std::int64_t w = v;
            for (std::int64_t k = 0; k < limit; ++k) {
                if (k > 0) w = (w + label) % p;
                const std::int64_t value = k + best[li + 1][static_cast<std::size_t>(w)];
                const std::uint64_t c = ways[li + 1][static_cast<std::size_t>(w)];
                if (value > top) {
                    top = value;
                    count = c;
                    arg = k;
                } else if (value == top) {
                    if (count > kSat - c) {
                        count = kSat;
                        saturated = true;
                    } else {
                        count += c;
                    }
                }
            }
            best[li][static_cast<std::size_t>(v)] = top;
            ways[li][static_cast<std::size_t>(v)] = count;
            choice[li][static_cast<std::size_t>(v)] = arg;
        }
    }

    LongestWalkResult res;
    res.length = best[1][0];
    res.optimal_count = ways[1][0];
    res.count_saturated = saturated && res.optimal_count == kSat;
    std::int64_t v = 0;
    for (std::int64_t label = 1; label < p; ++label) {
        const std::int64_t k = choice[static_cast<std::size_t>(label)][static_cast<std::size_t>(v)];
        res.m.push_back(k);
        v = (v + k * label) % p;
    }
    if (res.optimal_count != 1) {
        throw VerificationError("longest_walk_dp(" + std::to_string(p) + "): " +
                                (res.count_saturated ? std::string("more than 2^64") : std::to_string(res.optimal_count)) +
                                " walks attain the maximal length " + std::to_string(res.length));
    }
    return res;
}

std::uint64_t partition_count(std::int64_t n)
{
    if (n < 0) return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (std::int64_t part = 1; part <= n; ++part) {
        for (std::int64_t t = part; t <= n; ++t) {
            const auto ti = static_cast<std::size_t>(t);
            if (__builtin_add_overflow(ways[ti], ways[ti - static_cast<std::size_t>(part)], &ways[ti])) {
                throw LimitError("partition_count: overflow at n = " + std::to_string(n));
            }
        }
    }
    return ways[static_cast<std::size_t>(n)];
}

void for_each_partition(std::int64_t n, const std::function<void(const Partition&)>& visit)
{
    if (n < 0) return;
    std::vector<std::int64_t> parts;
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t remaining, std::int64_t max_part) {
        if (remaining == 0) {
            visit(Partition{parts});
            return;
        }
        for (std::int64_t k = std::min(remaining, max_part); k >= 1; --k) {
            parts.push_back(k);
            rec(remaining - k, k);
            parts.pop_back();
        }
    };
    rec(n, n);
}

PartitionSearchResult exhaustive_partition_search(std::int64_t p, std::int64_t size_cap, std::uint64_t budget)
{
    if (p < 2) throw std::invalid_argument("exhaustive_partition_search: p must be at least 2");
    if (size_cap < 0) throw std::invalid_argument("exhaustive_partition_search: negative size cap");
    std::uint64_t total = 0;
    for (std::int64_t n = 0; n <= size_cap; ++n) {
        total += partition_count(n);
        if (total > budget) {
            throw LimitError("exhaustive_partition_search: more than " + std::to_string(budget) +
                             " partitions below the cap " + std::to_string(size_cap));
        }
    }

    PartitionSearchResult res;
    std::int64_t best_size = -1;
    for (std::int64_t n = 0; n <= size_cap; ++n) {
        for_each_partition(n, [&](const Partition& lambda) {
            ++res.searched;
            if (!is_p_regular(lambda, p) || !is_p_core(lambda, p)) return;
            if (n > best_size) {
                best_size = n;
                res.best = lambda;
                res.maximal_count = 1;
            } else if (n == best_size) {
                ++res.maximal_count;
            }
        });
    }
    if (res.maximal_count != 1) {
        throw VerificationError("exhaustive_partition_search(" + std::to_string(p) + ", " + std::to_string(size_cap) +
                                "): maximum attained by " + std::to_string(res.maximal_count) + " partitions");
    }
    return res;
}

} // namespace lambdap
