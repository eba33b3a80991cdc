#pragma once

#include <stdexcept>

namespace convexdiff {

// Rejected input or parameters. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A statement that provably holds for every valid input appeared violated.
// Always a bug, never a finding. The CLI maps this to exit code 2.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace convexdiff
