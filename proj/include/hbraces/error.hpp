#pragma once

#include <stdexcept>
#include <string>

namespace hbraces {

// Base of every error the library raises. The C API maps each subclass to
// its own status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke a precondition (length mismatch, flavor mismatch, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

// Bad user input at the API edge: unknown names, n = 0, malformed flags.
class UsageError : public Error {
public:
    using Error::Error;
};

// Zero linear coefficient where an invertible series is required.
class SingularSeries : public Error {
public:
    using Error::Error;
};

// A computation needs more series coefficients than the truncation keeps.
class InsufficientOrder : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hbraces
