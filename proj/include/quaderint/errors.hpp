#pragma once

#include <stdexcept>
#include <string>

namespace quaderint {

// Violated precondition or mathematical contract (wrong dimension, unbounded
// operand, exponent mismatch, ...). Maps to exit/status code 1.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input. Maps to exit/status code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quaderint
