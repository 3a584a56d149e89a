#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace padeguard {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (shape, length, empty data).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The rational function has q(0) = 0, so no Taylor series at the origin.
class PoleAtOrigin : public Error {
public:
    PoleAtOrigin() : Error("pole at origin: q(0) = 0") {}
};

/// A matrix required to have full row rank (or be invertible) does not.
class RankDeficient : public Error {
public:
    using Error::Error;
};

/// Degenerate rational function handed to an operation requiring nondegeneracy.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

}  // namespace padeguard
