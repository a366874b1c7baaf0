// Error hierarchy shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace xsep {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input data (bad vectors, bad state files).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation precondition does not hold (e.g. half-rank normalization).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A requested computation exceeds its configured cost guard.
class CostGuardError : public Error {
public:
    CostGuardError(const std::string& what, double estimated_size)
        : Error(what), estimated_size(estimated_size) {}
    double estimated_size;
};

}  // namespace xsep
