#pragma once

#include <stdexcept>
#include <string>

namespace hdisc {

// Malformed input file or flag value. CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an operation was violated. CLI exit code 3.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// The LP route and the brute-force route disagree. Never reconciled
// silently; surfaced as a hard failure. CLI exit code 4.
struct LpOracleMismatch : std::runtime_error {
    explicit LpOracleMismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hdisc
