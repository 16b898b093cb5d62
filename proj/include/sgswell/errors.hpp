#pragma once

#include <stdexcept>
#include <string>

namespace sgswell {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A water-height coefficient vector lost stochastic positivity: some
/// eigenvalue of P(h) dropped to or below the positivity guard.
class NonPositiveHeight : public Error {
public:
    using Error::Error;
};

/// An SG matrix requested for inversion has a (numerically) zero eigenvalue.
class SingularState : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace sgswell
