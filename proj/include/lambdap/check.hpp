#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lambdap {

// Accumulates violations of asserted properties and report-only notes.
// Only the first few messages of each kind are kept; counts are exact.
class CheckOutcome {
public:
    static constexpr std::size_t kMaxMessages = 8;

    void fail(std::string message)
    {
        ++violations_;
        if (failures_.size() < kMaxMessages) failures_.push_back(std::move(message));
    }
    void note(std::string message)
    {
        ++notes_count_;
        if (notes_.size() < kMaxMessages) notes_.push_back(std::move(message));
    }
    void merge(const CheckOutcome& other)
    {
        for (const auto& m : other.failures_) fail(m);
        violations_ += other.violations_ - other.failures_.size();
        for (const auto& m : other.notes_) note(m);
        notes_count_ += other.notes_count_ - other.notes_.size();
    }

    bool ok() const noexcept { return violations_ == 0; }
    std::uint64_t violations() const noexcept { return violations_; }
    std::uint64_t note_count() const noexcept { return notes_count_; }
    const std::vector<std::string>& failures() const noexcept { return failures_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

    // First failure, or empty.
    std::string summary() const { return failures_.empty() ? std::string{} : failures_.front(); }

private:
    std::uint64_t violations_ = 0;
    std::uint64_t notes_count_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

} // namespace lambdap
