#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lisum {

/// Working precision: the widest standard binary float on the platform.
using Real = long double;

inline constexpr Real kPi = std::numbers::pi_v<Real>;
inline constexpr Real kTwoPi = 2 * std::numbers::pi_v<Real>;
inline constexpr Real kEulerGamma = 0.5772156649015329L;

/// Height of the first non-trivial zero, as quoted to four decimals.
inline constexpr Real kFirstZeroHeight = 14.1347L;

// Error hierarchy. Every failure the library reports derives from Error so the
// CLI can map it onto an exit code in one place.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An error attached to a 1-based line of an input file.
class LineError : public Error {
public:
    LineError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ParseError : public LineError {
public:
    using LineError::LineError;
};

class ValidationError : public LineError {
public:
    using LineError::LineError;
};

class EmptyCatalog : public Error {
public:
    EmptyCatalog() : Error("zero catalog is empty") {}
};

class RangeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidPlant : public Error {
public:
    using Error::Error;
};

class TailRegimeError : public Error {
public:
    using Error::Error;
};

class ModelKindError : public Error {
public:
    using Error::Error;
};

class GridError : public Error {
public:
    using Error::Error;
};

/// Quadrature did not reach its tolerance; the best partial value is kept.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, Real partial, Real err_est)
        : Error(what), partial_(partial), err_est_(err_est) {}
    Real partial_value() const noexcept { return partial_; }
    Real err_est() const noexcept { return err_est_; }

private:
    Real partial_;
    Real err_est_;
};

}  // namespace lisum
