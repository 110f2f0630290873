#include "qepi/entropy.hpp"

#include <cmath>
#include <numbers>

#include "qepi/errors.hpp"

namespace qepi {

namespace {

double log_det_spd(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("entropy: sigma is not positive definite");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) acc += std::log(llt.matrixL()(i, i));
  return 2.0 * acc;
}

double renyi_of_density(const PhaseSpaceGaussian& g, double p) {
  if (!(p > 0.0) || p == 1.0)
    throw BadOrder("renyi entropy: order must satisfy p > 0, p != 1");
  const double n = static_cast<double>(g.dims);
  return 0.5 * (n * std::log(2.0 * std::numbers::pi) + log_det_spd(g.sigma)) +
         0.5 * n * std::log(p) / (p - 1.0);
}

}  // namespace

EntropyValue classical_renyi_entropy(const PhaseSpaceGaussian& g, double p) {
  return {renyi_of_density(g, p), EntropyFunctional::classical_renyi, p, g.dims};
}

double classical_shannon_entropy(const PhaseSpaceGaussian& g) {
  const double n = static_cast<double>(g.dims);
  return 0.5 * (n * (std::log(2.0 * std::numbers::pi) + 1.0) + log_det_spd(g.sigma));
}

EntropyValue wehrl_renyi_entropy(const GaussianState& state, double p) {
  return {renyi_of_density(husimi_of(state), p), EntropyFunctional::wehrl, p,
          state.modes};
}

EntropyValue wigner_renyi_entropy(const GaussianState& state, double p) {
  return {renyi_of_density(wigner_of(state), p), EntropyFunctional::wigner_renyi,
          p, state.modes};
}

EntropyPower entropy_power(const EntropyValue& entropy) {
  if (entropy.modes_or_dims < 1)
    throw BadParams("entropy_power: size tag must be >= 1");
  double exponent = 0.0;
  if (entropy.functional == EntropyFunctional::classical_renyi)
    exponent = 2.0 * entropy.value / static_cast<double>(entropy.modes_or_dims);
  else
    exponent = entropy.value / static_cast<double>(entropy.modes_or_dims);
  return {std::exp(exponent), entropy.functional, entropy.order_p,
          entropy.modes_or_dims};
}

double photon_number(const GaussianState& state) {
  return g_inverse(von_neumann_entropy(state) / static_cast<double>(state.modes));
}

}  // namespace qepi
