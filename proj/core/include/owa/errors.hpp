#ifndef OWA_ERRORS_HPP
#define OWA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace owa {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (instance files, weight specs, config files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally well-formed input that violates a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Vector length does not match the instance dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A numeric parameter is outside its admissible range.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// The request is valid but exceeds what this code path can compute;
/// the message names the alternative (Monte Carlo, local search, ...).
class CapabilityError : public Error {
public:
    using Error::Error;
};

} // namespace owa

#endif // OWA_ERRORS_HPP
