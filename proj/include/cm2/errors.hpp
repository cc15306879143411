#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cm2 {

/// Caller broke an API contract: mismatched variable sets, malformed
/// arguments, out-of-range indices.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value-level precondition failed, e.g. exact division by a non-divisor.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The input is outside the mathematical domain of the operation
/// (disconnected graph fed to a spanning-tree routine, non-CM ideal fed to
/// the relation-tree machinery, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text input rejected. `position` is a 0-based byte offset into the input.
struct ParseError : UsageError {
    std::size_t position;

    ParseError(const std::string& what, std::size_t pos)
        : UsageError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace cm2
