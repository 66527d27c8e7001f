#pragma once

#include <stdexcept>
#include <string>

namespace modgroup {

// Malformed textual input (words, matrices, stone strings, junction words).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates an operation's precondition.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured resource limit would be exceeded.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace modgroup
