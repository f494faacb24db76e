#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lambdap {

// A weakly decreasing sequence of positive parts. The empty partition is
// valid and is p-core and p-regular for every p.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);

    // Comma-separated parts, e.g. "4,2,2,1,1"; "" is the empty partition.
    static Partition parse(std::string_view text);

    std::span<const std::int64_t> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t operator[](std::size_t k) const { return parts_[k]; }

    // |lambda|
    std::int64_t size() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

Partition conjugate(const Partition& lambda);

// One entry per cell, row-major order.
std::vector<std::int64_t> hook_lengths(const Partition& lambda);

bool is_p_core(const Partition& lambda, std::int64_t p);

// The p'-partition condition: no part divisible by p.
bool is_p_regular(const Partition& lambda, std::int64_t p);

} // namespace lambdap
