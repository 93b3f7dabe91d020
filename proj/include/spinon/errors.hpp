#pragma once

#include <stdexcept>
#include <string>

namespace spinon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter failed validation (S not a half-integer, T <= 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

/// The sphere-chart point is within one finite-difference step of a pole.
class PoleSingularity : public Error {
 public:
  using Error::Error;
};

class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

class QuadratureUnconverged : public Error {
 public:
  using Error::Error;
};

/// Neither wavefunction weight reproduces the Schrödinger operator; this
/// points at a derivation error rather than a numerical one.
class ConventionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptySector : public Error {
 public:
  using Error::Error;
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace spinon
