#pragma once

#include <stdexcept>
#include <string>

namespace lambdap {

// A mathematical claim being checked did not hold (oracle disagreement,
// non-unique maximum, a lemma's inequality failing). Distinct from usage
// errors, which are reported as std::invalid_argument.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// The request is well-formed but exceeds a configured work or memory cap.
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; always a bug in this library.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace lambdap
