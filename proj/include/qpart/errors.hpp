#pragma once

#include <stdexcept>
#include <string>

namespace qpart {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters outside the declared domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// A series or iteration hit its term cap before the tail dropped below tolerance.
class NonConvergence : public Error {
public:
    using Error::Error;
};

// Guard against combinatorial blowup (enumeration size, matrix order).
class LimitExceeded : public Error {
public:
    using Error::Error;
};

// Division by a (numerically) vanishing quantity in a recurrence or matrix formula.
class SingularConfiguration : public Error {
public:
    using Error::Error;
};

}  // namespace qpart
