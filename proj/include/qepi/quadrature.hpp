#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "qepi/phase_space.hpp"

namespace qepi {

enum class QuadratureScheme { tensor_gauss_hermite, monte_carlo };

/// Oracle configuration. The tensor scheme covers n <= 4 only; Monte Carlo
/// importance-samples from the density itself and is seed-deterministic.
struct QuadratureSpec {
  QuadratureScheme scheme = QuadratureScheme::tensor_gauss_hermite;
  int nodes_per_axis = 64;        // >= 8
  long sample_count = 1'000'000;  // >= 10'000
  std::uint64_t seed = 0;
};

/// Gauss-Hermite nodes and weights for weight exp(-x^2) via Golub-Welsch.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_hermite(int n);

/// Numerical (integral g^p dx)^(1/p), independent of the closed-form L^p
/// path; serves as the oracle for lp_norm and the entropy functionals.
double lp_norm_quadrature(const PhaseSpaceGaussian& g, double p,
                          const QuadratureSpec& spec);

}  // namespace qepi
