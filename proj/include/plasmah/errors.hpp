#pragma once

#include <stdexcept>
#include <string>

namespace plasmah {

/// Base class for all physics-domain errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested outside the operation's domain (e.g. r <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// sigma_nm = 0: the unperturbed energy and rho are singular.
class DegenerateIndexError : public Error {
public:
    using Error::Error;
};

/// sigma_0m <= 0: r^sigma_0m diverges at the origin, so the wavefunction,
/// its normalization and every quadrature over it are undefined. Energy
/// formulas remain valid for such states.
class WavefunctionUndefinedError : public Error {
public:
    using Error::Error;
};

/// F > 0 makes the potential unbounded from below (-F*r): no bound states.
class UnboundedPotentialError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Malformed argument (unknown figure id, k > n_points, bad data file, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

} // namespace plasmah
