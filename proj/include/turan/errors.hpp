#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turan {

// Unparseable or malformed input (graph6 text, shorthand specs, JSON instances).
// The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input that violates an operation's preconditions
// (e.g. chi(F) <= chi(H) in a stability instance). CLI exit code 2.
struct InvalidInstance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input is outside the scale this tool supports exactly (e.g. an automorphism
// group too large to enumerate). CLI exit code 2.
struct UnsupportedScale : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget. Carries progress so callers can report
// partial results. CLI exit code 3.
struct BudgetExceeded : std::runtime_error {
    std::uint64_t nodes_processed;
    std::uint64_t emitted;
    BudgetExceeded(const std::string& what, std::uint64_t nodes, std::uint64_t emitted_count)
        : std::runtime_error(what), nodes_processed(nodes), emitted(emitted_count) {}
};

}  // namespace turan
