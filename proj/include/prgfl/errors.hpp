#ifndef PRGFL_ERRORS_HPP
#define PRGFL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prgfl {

/// Base class for all workbench errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands that must have equal length do not.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A slicing index is outside the admissible range.
class BoundsError : public Error {
public:
    using Error::Error;
};

/// A symbol is not part of the alphabet it is used with.
class AlphabetError : public Error {
public:
    using Error::Error;
};

/// Malformed input files, invalid parameters, missing advice lengths.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// An exhaustive sweep or a simulation exceeded its configured budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An internal identity that must hold by construction was violated.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace prgfl

#endif
