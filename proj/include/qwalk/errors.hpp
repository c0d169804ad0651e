#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Initial state (or spinor argument) is not normalized.
class NormalizationError : public Error {
public:
    using Error::Error;
};

/// A coin matrix failed the unitarity check.
class UnitarityError : public Error {
public:
    using Error::Error;
};

/// An orthogonal coin angle hit a forbidden multiple of pi/2.
class DegenerateCoinError : public Error {
public:
    using Error::Error;
};

/// A schedule coin has a zero entry.
class ZeroEntryError : public Error {
public:
    using Error::Error;
};

/// Two-period density requested with theta0 == theta1.
class EqualAngleError : public Error {
public:
    using Error::Error;
};

/// Operation applied to a schedule of the wrong kind.
class KindError : public Error {
public:
    using Error::Error;
};

/// Argument outside the supported domain (moment order, density scale, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Symbol eigenvalues too close to each other; eigenvectors ill-conditioned.
class DegenerateSymbolError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace qwalk
