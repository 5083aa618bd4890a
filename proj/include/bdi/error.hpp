#pragma once

#include <stdexcept>
#include <string>

namespace bdi {

/// Base for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed quiver, dimension or rank data.
class InvalidInstance : public Error {
public:
    using Error::Error;
};

/// An operation was called with arguments outside its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured guard or cap was exceeded.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Two independent computations that must agree did not.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace bdi
