#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qepi/gaussian_state.hpp"

namespace qepi {

enum class DensityKind { wigner, husimi, classical };

/// Unit-normalized Gaussian probability density on R^n with n = dims even for
/// the wigner/husimi kinds (n = 2D). `sigma` is the density covariance, kept
/// positive definite.
struct PhaseSpaceGaussian {
  int dims = 0;
  Eigen::VectorXd mean;
  Eigen::MatrixXd sigma;
  DensityKind kind = DensityKind::classical;
};

/// Validating constructor: checks shape, symmetry, positive definiteness
/// (Cholesky must succeed).
PhaseSpaceGaussian make_density(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& sigma,
                                DensityKind kind = DensityKind::classical);

/// Wigner density of a Gaussian state: normal(mean, cov / 2). The vacuum
/// evaluates to 1 / pi^D at the origin.
PhaseSpaceGaussian wigner_of(const GaussianState& state);

/// Husimi density: normal(mean, (cov + I) / 2), i.e. the Wigner density
/// smoothed by the vacuum kernel.
PhaseSpaceGaussian husimi_of(const GaussianState& state);

/// Characteristic function chi(eta), the Fourier dual of the Wigner density:
/// chi(eta) = exp(i mean^T Omega eta - eta^T Omega^T (cov/2) Omega eta / 2).
/// chi(0) = 1 and |chi| <= 1.
std::complex<double> characteristic_function(const GaussianState& state,
                                             const Eigen::VectorXd& eta);

/// Pointwise density value.
double eval_density(const PhaseSpaceGaussian& g, const Eigen::VectorXd& x);

/// log of integral g^p dx in closed form:
/// -(n/2) ln p + (n(1-p)/2) ln(2 pi) + ((1-p)/2) ln det Sigma, for p >= 1.
double lp_integral_log(const PhaseSpaceGaussian& g, double p);

/// L^p norm (integral g^p)^(1/p); exactly 1 at p = 1.
double lp_norm(const PhaseSpaceGaussian& g, double p);

/// Scaled convolution: the density of sqrt(tau) X + sqrt(1-tau) Y for
/// independent X ~ gx, Y ~ gy of the same kind. Means combine with
/// sqrt-weights, covariances linearly.
PhaseSpaceGaussian convolve_densities(const PhaseSpaceGaussian& gx,
                                      const PhaseSpaceGaussian& gy, double tau);

/// Plain convolution density of X + Y (kind tag becomes classical).
PhaseSpaceGaussian convolve_plain(const PhaseSpaceGaussian& gx,
                                  const PhaseSpaceGaussian& gy);

}  // namespace qepi
