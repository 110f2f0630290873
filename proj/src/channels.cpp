#include "qepi/channels.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "qepi/errors.hpp"

namespace qepi {

namespace {

// diag(1, -1) repeated per mode.
Eigen::MatrixXd conjugation_matrix(int modes) {
  Eigen::VectorXd d(2 * modes);
  for (int k = 0; k < modes; ++k) {
    d(2 * k) = 1.0;
    d(2 * k + 1) = -1.0;
  }
  return d.asDiagonal();
}

}  // namespace

GaussianState beam_splitter_mix(const GaussianState& x, const GaussianState& y,
                                double tau) {
  if (x.modes != y.modes)
    throw ModeMismatch("beam_splitter_mix: mode counts must match");
  if (!(tau > 0.0 && tau < 1.0))
    throw BadTau("beam_splitter_mix: tau must lie in (0, 1)");
  const Eigen::VectorXd mean =
      std::sqrt(tau) * x.mean + std::sqrt(1.0 - tau) * y.mean;
  const Eigen::MatrixXd cov = tau * x.cov + (1.0 - tau) * y.cov;
  return make_state(mean, cov);
}

GaussianState amplifier_mix(const GaussianState& a, const GaussianState& b,
                            double zeta) {
  if (a.modes != b.modes)
    throw ModeMismatch("amplifier_mix: mode counts must match");
  if (!(zeta > 1.0)) throw BadGain("amplifier_mix: gain zeta must exceed 1");
  const Eigen::MatrixXd z = conjugation_matrix(a.modes);
  const Eigen::VectorXd mean =
      std::sqrt(zeta) * a.mean - std::sqrt(zeta - 1.0) * (z * b.mean);
  const Eigen::MatrixXd cov = zeta * a.cov + (zeta - 1.0) * z * b.cov * z;
  return make_state(mean, cov);
}

GaussianState amplifier_joint(const GaussianState& ab, double zeta) {
  if (!(zeta > 1.0)) throw BadGain("amplifier_joint: gain zeta must exceed 1");
  if (ab.modes % 2 != 0)
    throw ModeMismatch("amplifier_joint: state must hold signal and idler halves");
  const int k = ab.modes / 2;
  const double ch = std::sqrt(zeta);
  const double sh = std::sqrt(zeta - 1.0);

  // Two-mode squeezer on each (signal_j, idler_j) pair; the idler couples
  // through -sh * diag(1, -1) so an aligned two-mode squeezed input is
  // unsqueezed back toward vacuum.
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(4 * k, 4 * k);
  for (int j = 0; j < k; ++j) {
    const int q_s = 2 * j, p_s = 2 * j + 1;
    const int q_i = 2 * (k + j), p_i = 2 * (k + j) + 1;
    s(q_s, q_s) = ch;
    s(p_s, p_s) = ch;
    s(q_i, q_i) = ch;
    s(p_i, p_i) = ch;
    s(q_s, q_i) = -sh;
    s(p_s, p_i) = sh;
    s(q_i, q_s) = -sh;
    s(p_i, p_s) = sh;
  }

  GaussianState amplified;
  amplified.modes = ab.modes;
  amplified.mean = s * ab.mean;
  amplified.cov = s * ab.cov * s.transpose();

  std::vector<int> signal(k);
  std::iota(signal.begin(), signal.end(), 0);
  const GaussianState out = reduce(amplified, signal);
  return make_state(out.mean, out.cov);
}

GaussianState thermal_noise_channel(const GaussianState& in, double tau,
                                    double env_nbar) {
  return beam_splitter_mix(in, thermal(env_nbar, in.modes), tau);
}

}  // namespace qepi
