#pragma once

#include "qepi/gaussian_state.hpp"

namespace qepi {

/// Beam-splitter mixing of two equal-size states with transmissivity tau in
/// (0, 1): cov_z = tau cov_x + (1-tau) cov_y,
/// mean_z = sqrt(tau) mean_x + sqrt(1-tau) mean_y.
GaussianState beam_splitter_mix(const GaussianState& x, const GaussianState& y,
                                double tau);

/// Phase-insensitive amplifier of gain zeta > 1 fed with a product input:
/// cov = zeta cov_a + (zeta-1) Z cov_b Z with Z = diag(1, -1) per mode,
/// mean = sqrt(zeta) mean_a - sqrt(zeta-1) Z mean_b.
GaussianState amplifier_mix(const GaussianState& a, const GaussianState& b,
                            double zeta);

/// Amplifier acting on a joint (possibly correlated) 2k-mode state whose
/// first k modes are the signal and last k the idler: applies the two-mode
/// squeezer symplectic pairwise, then traces out the idler. Reproduces
/// amplifier_mix exactly on product inputs.
GaussianState amplifier_joint(const GaussianState& ab, double zeta);

/// Thermal-noise channel: beam-splitter mixing with a thermal environment of
/// mean photon number env_nbar at transmissivity tau.
GaussianState thermal_noise_channel(const GaussianState& in, double tau,
                                    double env_nbar);

}  // namespace qepi
