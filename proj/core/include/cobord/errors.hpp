#pragma once

#include <stdexcept>
#include <string>

namespace cobord {

// A request fell outside the tables / degree window of the active context.
// Carries the degree (or index) that would have been required.
struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what, long required = 0)
        : std::runtime_error(what), required_degree(required) {}
    long required_degree;
};

// Invalid argument at the mathematical level (non-prime p, bad index range,
// convention mismatch, non-invertible leading term, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace cobord
