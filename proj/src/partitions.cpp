#include "lambdap/partitions.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace lambdap {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }
}

Partition Partition::parse(std::string_view text)
{
    std::vector<std::int64_t> parts;
    if (text.empty()) return Partition{};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::int64_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size() || token.empty()) {
            throw std::invalid_argument("Partition::parse: bad part '" + std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition{std::move(parts)};
}

std::int64_t Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::string Partition::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k > 0) out.push_back(',');
        out += std::to_string(parts_[k]);
    }
    return out;
}

Partition conjugate(const Partition& lambda)
{
    if (lambda.empty()) return {};
    std::vector<std::int64_t> columns(static_cast<std::size_t>(lambda[0]), 0);
    for (const std::int64_t part : lambda.parts()) {
        for (std::int64_t j = 0; j < part; ++j) ++columns[static_cast<std::size_t>(j)];
    }
    return Partition{std::move(columns)};
}

std::vector<std::int64_t> hook_lengths(const Partition& lambda)
{
    const Partition conj = conjugate(lambda);
    std::vector<std::int64_t> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (std::int64_t j = 0; j < lambda[i]; ++j) {
            // arm + leg + 1 with 0-based (i, j)
            hooks.push_back(lambda[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<std::int64_t>(i) - 1);
        }
    }
    return hooks;
}

bool is_p_core(const Partition& lambda, std::int64_t p)
{
    if (p < 2) throw std::invalid_argument("is_p_core: p must be at least 2");
    const Partition conj = conjugate(lambda);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (std::int64_t j = 0; j < lambda[i]; ++j) {
            const std::int64_t hook =
                lambda[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<std::int64_t>(i) - 1;
            if (hook % p == 0) return false;
        }
    }
    return true;
}

bool is_p_regular(const Partition& lambda, std::int64_t p)
{
    if (p < 2) throw std::invalid_argument("is_p_regular: p must be at least 2");
    for (const std::int64_t part : lambda.parts()) {
        if (part % p == 0) return false;
    }
    return true;
}

} // namespace lambdap
