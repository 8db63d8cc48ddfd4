#pragma once

#include <stdexcept>
#include <string>

namespace elm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input failed validation (non-finite data, bad counts, unknown ids).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Caller broke a documented precondition (e.g. mismatched dimensions).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Argument outside the function's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Derivative requested at a point where it does not exist.
class UndefinedDerivative : public Error {
public:
    using Error::Error;
};

/// Training requested in a regime that is not supported (more nodes than neurons).
class UnsupportedRegime : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace elm
