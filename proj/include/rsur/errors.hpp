#pragma once

#include <stdexcept>
#include <string>

namespace rsur {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Result not representable in double precision.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Polarization frame evaluated on (or too close to) the kz-axis.
class AxisSingularityError : public Error {
public:
    using Error::Error;
};

/// Grid descriptors that do not fit together.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Zero (or numerically zero) norm; variances are undefined.
class DegenerateNormError : public Error {
public:
    using Error::Error;
};

/// Radial grid too coarse for the requested eigenstates.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Not enough samples for a least-squares fit.
class FitError : public Error {
public:
    using Error::Error;
};

/// Malformed or unreadable field-grid file.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace rsur
