#pragma once

#include <stdexcept>
#include <string>

namespace xychain {

// Base for every error raised by the library. The CLI maps the concrete
// subclass to an exit status.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters or preconditions (bad N, nonpositive coupling, k out of range).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Analytic formula requested outside the parameter regime where it holds.
class RegimeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Iteration failed to converge or a self-consistency check tripped.
class NumericError : public Error {
public:
    using Error::Error;
};

// Peak time lies beyond any practical search window.
class HorizonError : public NumericError {
public:
    using NumericError::NumericError;
};

// Problem size exceeds the memory guard of a brute-force path.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace xychain
