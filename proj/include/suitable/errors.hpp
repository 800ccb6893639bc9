#pragma once

#include <stdexcept>
#include <string>

namespace suitable {

// Thrown when an operation's stated precondition does not hold
// (bad symbol, wrong role, parameter out of range, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the text-format reader on malformed input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Distinguished diagnostic: the array-to-core rewriting stalled even though
// the input verified as suitable. Callers must treat this as "procedure gave
// up", not as a nonexistence statement.
struct CannotNormalizeError : std::runtime_error {
    explicit CannotNormalizeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace suitable
