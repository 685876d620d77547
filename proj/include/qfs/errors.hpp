#pragma once

#include <stdexcept>
#include <string>

namespace qfs {

/// Base class for all errors raised by the library. The CLI maps each
/// subclass to a distinct exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (bad input, wrong shape,
/// mismatched fields, syntax errors).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A mathematical domain condition failed (division by zero, singular
/// matrix, inadmissible prime).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a documented resource cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace qfs
