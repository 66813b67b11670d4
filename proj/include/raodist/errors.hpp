#pragma once

#include <stdexcept>
#include <string>

namespace raodist {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter vector outside the family's domain. The message names the
/// violated constraint (e.g. "sigma must be positive").
class DomainError : public Error {
public:
    using Error::Error;
};

/// Sample point outside the support of the distribution.
class SupportError : public Error {
public:
    using Error::Error;
};

/// Two points passed to a binary operation belong to different families
/// or to descriptors with different hyperparameters.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// Requested operation is not defined for this family.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Vector/matrix dimensions do not match.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Point fails the hemisphere radius check.
class NotOnSphereError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Iterative solver stalled above its convergence tolerance.
class NonConvergenceError : public Error {
public:
    using Error::Error;
};

/// Operation undefined at coincident inputs (0/0).
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Named elliptical generator does not exist.
class UnknownGeneratorError : public Error {
public:
    using Error::Error;
};

} // namespace raodist
