#pragma once

#include <stdexcept>
#include <string>

namespace sosa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point lies outside the box it was declared against.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Unknown names, malformed settings, violated configuration invariants.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The initial design could not satisfy its rank requirement.
class DesignError : public Error {
public:
    using Error::Error;
};

/// The polynomial block of the RBF system is rank deficient; more points are needed.
class SurrogateRankError : public Error {
public:
    using Error::Error;
};

/// Non-finite objective values handed to the surrogate.
class DataError : public Error {
public:
    using Error::Error;
};

/// Non-finite arithmetic input.
class NumericError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sosa
