#pragma once

#include <stdexcept>
#include <string>

namespace catbij {

/// Raised when an argument violates an operation's precondition
/// (malformed word, non-standard tableau, wrong pattern class, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by exact polynomial division when the remainder is nonzero.
class DivisibilityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace catbij
