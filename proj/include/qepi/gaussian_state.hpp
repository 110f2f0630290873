#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qepi/symplectic.hpp"

namespace qepi {

/// Bosonic Gaussian state of D modes, held as a phase-space mean vector of
/// length 2D and a 2D x 2D covariance matrix in (q1, p1, ..., qD, pD)
/// ordering. The vacuum covariance is the identity; physicality means
/// cov + i*Omega >= 0, equivalently every symplectic eigenvalue nu_k >= 1.
struct GaussianState {
  int modes = 0;
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

/// Validating constructor. Checks dimensions, symmetry of the covariance
/// (1e-12 absolute), and the uncertainty relation with a -1e-9 slack on the
/// minimum eigenvalue of cov + i*Omega. The stored covariance is the
/// symmetrized input.
GaussianState make_state(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov);

/// Williamson spectrum of the state's covariance, ascending.
SymplecticSpectrum symplectic_eigenvalues(const GaussianState& state);

/// Von Neumann entropy in nats: sum over modes of g((nu_k - 1)/2).
double von_neumann_entropy(const GaussianState& state);

/// Renyi entropy of order p in nats from the closed form
/// Tr rho^p = prod_k 2^p / ((nu_k+1)^p - (nu_k-1)^p), p > 0, p != 1.
double renyi_trace_entropy(const GaussianState& state, double p);

/// Purity Tr rho^2 = 1 / sqrt(det cov).
double purity(const GaussianState& state);

GaussianState vacuum(int modes);

/// Thermal state with mean photon number nbar per mode: cov = (2*nbar + 1) I.
GaussianState thermal(double nbar, int modes);

/// Two-mode squeezed vacuum with parameter r: diagonal blocks cosh(2r) I2,
/// off-diagonal blocks sinh(2r) diag(1, -1).
GaussianState two_mode_squeezed_vacuum(double r);

/// Keep the listed modes (0-based, strictly increasing); the Gaussian partial
/// trace is principal 2x2-block extraction.
GaussianState reduce(const GaussianState& state, const std::vector<int>& kept_modes);

/// Tensor product: block-diagonal covariance, concatenated means.
GaussianState tensor_product(const GaussianState& a, const GaussianState& b);

/// Seed-deterministic random physical state: cov = S diag(nu) S^T with S a
/// random symplectic (squeeze factors bounded by squeeze_max) and
/// nu_k = 1 + Exp(thermal_rate); mean entries are i.i.d. standard normal.
GaussianState random_state(int modes, std::uint64_t seed,
                           double squeeze_max = 1.0, double thermal_rate = 1.0);

}  // namespace qepi
