#pragma once

#include <stdexcept>
#include <string>

namespace isocrit {

// Base class for all recoverable failures raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature failed to converge within the subdivision cap.
// Carries the last two refinement values so callers can see how far apart
// the estimates still were.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double last, double previous)
        : Error(what), last_value(last), previous_value(previous) {}

    double last_value;
    double previous_value;
};

// A covariance matrix failed the nondegeneracy test.
class DegeneracyError : public Error {
public:
    DegeneracyError(const std::string& what, double min_eig)
        : Error(what), min_eigenvalue(min_eig) {}

    double min_eigenvalue;
};

// An internal consistency check failed (a bug or a broken precondition).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// A test function's support is not covered by the census box.
class SupportError : public Error {
public:
    using Error::Error;
};

// A reported error bound exceeded the requested tolerance.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, double bound)
        : Error(what), offending_bound(bound) {}

    double offending_bound;
};

// Invalid experiment configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// File I/O failure (unwritable output path, unreadable config).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace isocrit
