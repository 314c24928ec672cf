#pragma once

#include <stdexcept>
#include <string>

namespace equicolor {

// Malformed input documents (graphs, colorings, instances).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A size or range guard refused to run (e.g. brute force beyond its cap).
struct GuardError : std::invalid_argument {
    explicit GuardError(const std::string& what) : std::invalid_argument(what) {}
};

// The repair loop ran out of applicable moves. On inputs inside a supported
// graph class with r at or above the class threshold this is a
// counterexample candidate and the caller should preserve the trace.
struct RepairExhausted : std::runtime_error {
    explicit RepairExhausted(const std::string& what) : std::runtime_error(what) {}
};

// A structural fact the supported classes guarantee failed to hold at
// runtime. Like RepairExhausted, this is reportable evidence, not a bug in
// the caller's usage.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace equicolor
