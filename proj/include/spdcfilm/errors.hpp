#pragma once

#include <stdexcept>
#include <string>

namespace spdcfilm {

// Physics-domain failures (CLI exit code 3).
class PhysicsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fabry-Pérot denominator vanished (lossless guided-mode pole).
class ResonancePoleError : public PhysicsError {
 public:
  ResonancePoleError(double q, double omega, double thickness);
  double q() const { return q_; }
  double omega() const { return omega_; }
  double thickness() const { return thickness_; }

 private:
  double q_, omega_, thickness_;
};

// Quadrature refinement failed to converge.
class OracleDivergenceError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// Zero-amplitude biphoton state has no polarization density matrix.
class UndefinedStateError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// Linear inversion produced a matrix violating density-matrix invariants.
class ReconstructionError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

class IncompleteProfileError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

class NoPropagatingIdlerError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

// Unknown material name.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spdcfilm
