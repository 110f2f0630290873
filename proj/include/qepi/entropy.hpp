#pragma once

#include "qepi/gaussian_state.hpp"
#include "qepi/gfunction.hpp"
#include "qepi/phase_space.hpp"

namespace qepi {

enum class EntropyFunctional {
  classical_renyi,
  wehrl,
  wigner_renyi,
  von_neumann,
  trace_renyi,
};

/// Entropy value in nats, tagged with its functional, order, and the size it
/// was computed over (dimensions n for classical densities, modes D for state
/// functionals).
struct EntropyValue {
  double value = 0.0;
  EntropyFunctional functional = EntropyFunctional::classical_renyi;
  double order_p = 1.0;
  int modes_or_dims = 0;
};

/// Entropy power, same tags as the entropy it came from.
struct EntropyPower {
  double value = 0.0;
  EntropyFunctional functional = EntropyFunctional::classical_renyi;
  double order_p = 1.0;
  int modes_or_dims = 0;
};

/// Renyi entropy of order p of a Gaussian density on R^n:
/// H_p = (1/2) ln((2 pi)^n det Sigma) + (n/2) ln(p)/(p-1), p > 0, p != 1.
EntropyValue classical_renyi_entropy(const PhaseSpaceGaussian& g, double p);

/// Differential Shannon entropy (the p -> 1 limit):
/// (1/2) ln((2 pi e)^n det Sigma).
double classical_shannon_entropy(const PhaseSpaceGaussian& g);

/// Renyi entropy of the Husimi density of a state.
EntropyValue wehrl_renyi_entropy(const GaussianState& state, double p);

/// Renyi entropy of the Wigner density of a state.
EntropyValue wigner_renyi_entropy(const GaussianState& state, double p);

/// Entropy power: exp(2 H / n) for classical densities over R^n, exp(S / D)
/// for the state functionals over D modes. The two normalizations coincide
/// because n = 2D.
EntropyPower entropy_power(const EntropyValue& entropy);

/// Effective photon number: g_inverse(S(rho) / D) with S the von Neumann
/// entropy. Equals nbar exactly on thermal states.
double photon_number(const GaussianState& state);

}  // namespace qepi
