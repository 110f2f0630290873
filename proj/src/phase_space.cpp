#include "qepi/phase_space.hpp"

#include <cmath>
#include <numbers>

#include "qepi/errors.hpp"

namespace qepi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double log_det_from_llt(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < llt.matrixL().rows(); ++i)
    acc += std::log(llt.matrixL()(i, i));
  return 2.0 * acc;
}

}  // namespace

PhaseSpaceGaussian make_density(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& sigma, DensityKind kind) {
  if (sigma.rows() != sigma.cols() || sigma.rows() < 1)
    throw DimensionMismatch("make_density: sigma must be square");
  if (mean.size() != sigma.rows())
    throw DimensionMismatch("make_density: mean length must match sigma size");
  if (!mean.allFinite() || !sigma.allFinite())
    throw std::invalid_argument("make_density: non-finite entries");
  if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw NotSymmetric("make_density: sigma deviates from symmetry beyond 1e-12");

  PhaseSpaceGaussian g;
  g.dims = static_cast<int>(sigma.rows());
  g.mean = mean;
  g.sigma = 0.5 * (sigma + sigma.transpose());
  g.kind = kind;
  Eigen::LLT<Eigen::MatrixXd> llt(g.sigma);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("make_density: sigma is not positive definite");
  return g;
}

PhaseSpaceGaussian wigner_of(const GaussianState& state) {
  return make_density(state.mean, 0.5 * state.cov, DensityKind::wigner);
}

PhaseSpaceGaussian husimi_of(const GaussianState& state) {
  const Eigen::MatrixXd sigma =
      0.5 * (state.cov + Eigen::MatrixXd::Identity(state.cov.rows(), state.cov.cols()));
  return make_density(state.mean, sigma, DensityKind::husimi);
}

std::complex<double> characteristic_function(const GaussianState& state,
                                             const Eigen::VectorXd& eta) {
  if (eta.size() != 2 * state.modes)
    throw DimensionMismatch("characteristic_function: eta must have length 2D");
  const Eigen::MatrixXd omega = symplectic_form(state.modes);
  const Eigen::VectorXd k = omega * eta;
  const double phase = state.mean.dot(k);
  const double quad = 0.25 * k.dot(state.cov * k);  // k^T (cov/2) k / 2
  return std::exp(std::complex<double>(-quad, phase));
}

double eval_density(const PhaseSpaceGaussian& g, const Eigen::VectorXd& x) {
  if (x.size() != g.dims)
    throw DimensionMismatch("eval_density: point has wrong dimension");
  Eigen::LLT<Eigen::MatrixXd> llt(g.sigma);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("eval_density: sigma is not positive definite");
  const Eigen::VectorXd d = x - g.mean;
  const double quad = d.dot(llt.solve(d));
  const double log_norm =
      -0.5 * (g.dims * std::log(kTwoPi) + log_det_from_llt(llt));
  return std::exp(log_norm - 0.5 * quad);
}

double lp_integral_log(const PhaseSpaceGaussian& g, double p) {
  if (!(p >= 1.0)) throw BadOrder("lp_integral_log: order must satisfy p >= 1");
  Eigen::LLT<Eigen::MatrixXd> llt(g.sigma);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("lp_integral_log: sigma is not positive definite");
  const double n = static_cast<double>(g.dims);
  return -0.5 * n * std::log(p) + 0.5 * n * (1.0 - p) * std::log(kTwoPi) +
         0.5 * (1.0 - p) * log_det_from_llt(llt);
}

double lp_norm(const PhaseSpaceGaussian& g, double p) {
  return std::exp(lp_integral_log(g, p) / p);
}

PhaseSpaceGaussian convolve_densities(const PhaseSpaceGaussian& gx,
                                      const PhaseSpaceGaussian& gy, double tau) {
  if (gx.dims != gy.dims)
    throw DimensionMismatch("convolve_densities: dimensions must match");
  if (gx.kind != gy.kind)
    throw KindMismatch("convolve_densities: density kinds must match");
  if (!(tau > 0.0 && tau < 1.0))
    throw BadTau("convolve_densities: tau must lie in (0, 1)");
  PhaseSpaceGaussian out;
  out.dims = gx.dims;
  out.mean = std::sqrt(tau) * gx.mean + std::sqrt(1.0 - tau) * gy.mean;
  out.sigma = tau * gx.sigma + (1.0 - tau) * gy.sigma;
  out.kind = gx.kind;
  return out;
}

PhaseSpaceGaussian convolve_plain(const PhaseSpaceGaussian& gx,
                                  const PhaseSpaceGaussian& gy) {
  if (gx.dims != gy.dims)
    throw DimensionMismatch("convolve_plain: dimensions must match");
  PhaseSpaceGaussian out;
  out.dims = gx.dims;
  out.mean = gx.mean + gy.mean;
  out.sigma = gx.sigma + gy.sigma;
  out.kind = DensityKind::classical;
  return out;
}

}  // namespace qepi
