#pragma once

#include <stdexcept>

namespace parikh {

/// Input violates an operation's contract (bad letter, wrong arity, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance exceeds a configured cap on an exhaustive search.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Connected graph admits no strong ordering, hence no representing word.
class NotRepresentableError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace parikh
