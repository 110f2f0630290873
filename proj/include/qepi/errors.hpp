#pragma once

#include <stdexcept>

namespace qepi {

// Invalid shapes or sizes of vectors/matrices fed to a constructor or op.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Covariance matrix deviates from its transpose beyond tolerance.
struct NotSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Covariance fails the physicality test: min eig(cov + i*Omega) < -1e-9.
struct UncertaintyViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Eigenvalues of Omega*cov do not form +/- i*nu conjugate pairs within
// tolerance; indicates a non-symmetric or corrupted covariance.
struct PairingFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Entropy order p outside the accepted domain (p > 0, p != 1).
struct BadOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Quadrature scheme cannot handle the requested dimension.
struct SchemeUnsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Phase-space densities of different kinds cannot be combined.
struct KindMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mode counts of two states disagree where they must match.
struct ModeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mixing weight tau outside (0, 1).
struct BadTau : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Amplifier gain zeta outside (1, inf).
struct BadGain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exponent triple (r, s, t) violates 1/r + 1/s - 1/t = 1 or r, s, t >= 1.
struct BadTriple : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Scalar parameters violate a documented constraint (e.g. a + b != 1 - 1/t).
struct ConstraintViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Scan parameters outside the admissible domain (e.g. c outside (0,1)).
struct BadDomain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Generic invalid numeric parameter for a harness op.
struct BadParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Negative input where a non-negative value is required.
struct NegativeArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Iterative solver exhausted its iteration budget.
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mean photon number below zero.
struct NegativeMeanPhotons : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Battery configuration fails validation.
struct ConfigInvalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operational failure reading or parsing an input file (as opposed to a
// well-formed file describing an invalid state).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qepi
