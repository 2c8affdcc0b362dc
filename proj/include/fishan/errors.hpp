#pragma once

#include <stdexcept>
#include <string>

namespace fishan {

// Error taxonomy, mirrored by the CLI exit codes:
//   ConfigError -> 2, ParseError/DataError -> 3, DomainError (and
//   subclasses) -> 4, QuadratureError -> 5.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid run configuration (bad flags, impossible window layout, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed input text (carries the offending line number in the message).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid input with invalid content (non-monotone index, ...).
class DataError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Sample with zero spread; no density estimate exists.
class DegenerateSampleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Shape parameter for which the closed-form FIM/FSC is undefined (k <= 2).
class ShapeDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

// Plug-in functional came out with the wrong sign; no usable bandwidth.
class BandwidthError : public DomainError {
public:
    using DomainError::DomainError;
};

// Adaptive integration ran out of budget. Carries the best estimate and the
// error bound it reached.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double best_estimate, double error_bound)
        : Error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

}  // namespace fishan
