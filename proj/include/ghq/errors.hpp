#pragma once

#include <stdexcept>
#include <string>

namespace ghq {

// Base of every error thrown by the library. The CLI maps the concrete type
// onto an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (x <= 0, q outside (0,1), ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Invalid distribution parameters or invalid weight vectors.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Quadrature size outside the supported range.
class SizeError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

// Result not representable as a finite double.
class RangeError : public Error {
public:
    using Error::Error;
};

// Expectation that does not exist, e.g. an MGF evaluated outside its radius.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Iterative procedure that did not reach its tolerance. Carries the best
// estimate obtained so far.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double partial, double error_estimate)
        : Error(what), partial_(partial), error_estimate_(error_estimate) {}

    double partial() const noexcept { return partial_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double partial_;
    double error_estimate_;
};

}  // namespace ghq
