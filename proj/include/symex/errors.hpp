#pragma once

#include <stdexcept>

namespace symex {

/// A formula was asked to run outside the range it is valid for.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Bad caller-supplied option (unknown family, malformed flag value).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidExponentVector : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace symex
