#include "qepi/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "qepi/errors.hpp"
#include "qepi/gfunction.hpp"

namespace qepi {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kUncertaintySlack = 1e-9;

double log_det_spd(const Eigen::MatrixXd& m) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success)
    throw UncertaintyViolated("covariance is not positive definite");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) acc += std::log(llt.matrixL()(i, i));
  return 2.0 * acc;
}

}  // namespace

GaussianState make_state(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov) {
  if (cov.rows() != cov.cols() || cov.rows() < 2 || cov.rows() % 2 != 0)
    throw DimensionMismatch("make_state: covariance must be 2D x 2D with D >= 1");
  if (mean.size() != cov.rows())
    throw DimensionMismatch("make_state: mean length must match covariance size");
  if (!mean.allFinite() || !cov.allFinite())
    throw std::invalid_argument("make_state: non-finite entries");
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol)
    throw NotSymmetric("make_state: covariance deviates from symmetry beyond 1e-12");

  GaussianState state;
  state.modes = static_cast<int>(cov.rows()) / 2;
  state.mean = mean;
  state.cov = 0.5 * (cov + cov.transpose());

  const Eigen::MatrixXd omega = symplectic_form(state.modes);
  Eigen::MatrixXcd h = state.cov.cast<std::complex<double>>();
  h += std::complex<double>(0.0, 1.0) * omega.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw UncertaintyViolated("make_state: eigenvalue check failed to converge");
  if (solver.eigenvalues().minCoeff() < -kUncertaintySlack)
    throw UncertaintyViolated("make_state: cov + i*Omega has an eigenvalue below -1e-9");
  return state;
}

SymplecticSpectrum symplectic_eigenvalues(const GaussianState& state) {
  return symplectic_spectrum_of_cov(state.cov);
}

double von_neumann_entropy(const GaussianState& state) {
  const SymplecticSpectrum spec = symplectic_eigenvalues(state);
  double s = 0.0;
  for (double nu : spec.values) s += g_function(std::max(0.0, 0.5 * (nu - 1.0)));
  return s;
}

double renyi_trace_entropy(const GaussianState& state, double p) {
  if (!(p > 0.0) || p == 1.0)
    throw BadOrder("renyi_trace_entropy: order must satisfy p > 0, p != 1");
  const SymplecticSpectrum spec = symplectic_eigenvalues(state);
  // ln Tr rho^p accumulated as -p ln((nu+1)/2) - log1p(-q^p), q = (nu-1)/(nu+1).
  double log_trace = 0.0;
  for (double nu_raw : spec.values) {
    const double nu = std::max(1.0, nu_raw);
    log_trace -= p * std::log(0.5 * (nu + 1.0));
    const double q = (nu - 1.0) / (nu + 1.0);
    if (q > 0.0) log_trace -= std::log1p(-std::exp(p * std::log(q)));
  }
  return log_trace / (1.0 - p);
}

double purity(const GaussianState& state) {
  return std::exp(-0.5 * log_det_spd(state.cov));
}

GaussianState vacuum(int modes) { return thermal(0.0, modes); }

GaussianState thermal(double nbar, int modes) {
  if (nbar < 0.0) throw NegativeMeanPhotons("thermal: nbar must be >= 0");
  if (modes < 1) throw DimensionMismatch("thermal: modes must be >= 1");
  GaussianState state;
  state.modes = modes;
  state.mean = Eigen::VectorXd::Zero(2 * modes);
  state.cov = (2.0 * nbar + 1.0) * Eigen::MatrixXd::Identity(2 * modes, 2 * modes);
  return state;
}

GaussianState two_mode_squeezed_vacuum(double r) {
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(4, 4);
  cov.diagonal().setConstant(c);
  cov(0, 2) = cov(2, 0) = s;
  cov(1, 3) = cov(3, 1) = -s;
  return make_state(Eigen::VectorXd::Zero(4), cov);
}

GaussianState reduce(const GaussianState& state, const std::vector<int>& kept_modes) {
  if (kept_modes.empty())
    throw DimensionMismatch("reduce: at least one mode must be kept");
  for (std::size_t i = 0; i < kept_modes.size(); ++i) {
    if (kept_modes[i] < 0 || kept_modes[i] >= state.modes)
      throw DimensionMismatch("reduce: mode index out of range");
    if (i > 0 && kept_modes[i] <= kept_modes[i - 1])
      throw DimensionMismatch("reduce: mode indices must be strictly increasing");
  }
  const int m = static_cast<int>(kept_modes.size());
  GaussianState out;
  out.modes = m;
  out.mean.resize(2 * m);
  out.cov.resize(2 * m, 2 * m);
  for (int a = 0; a < m; ++a) {
    out.mean(2 * a) = state.mean(2 * kept_modes[a]);
    out.mean(2 * a + 1) = state.mean(2 * kept_modes[a] + 1);
    for (int b = 0; b < m; ++b)
      out.cov.block<2, 2>(2 * a, 2 * b) =
          state.cov.block<2, 2>(2 * kept_modes[a], 2 * kept_modes[b]);
  }
  return out;
}

GaussianState tensor_product(const GaussianState& a, const GaussianState& b) {
  GaussianState out;
  out.modes = a.modes + b.modes;
  out.mean.resize(2 * out.modes);
  out.mean << a.mean, b.mean;
  out.cov = Eigen::MatrixXd::Zero(2 * out.modes, 2 * out.modes);
  out.cov.topLeftCorner(2 * a.modes, 2 * a.modes) = a.cov;
  out.cov.bottomRightCorner(2 * b.modes, 2 * b.modes) = b.cov;
  return out;
}

GaussianState random_state(int modes, std::uint64_t seed, double squeeze_max,
                           double thermal_rate) {
  if (modes < 1) throw DimensionMismatch("random_state: modes must be >= 1");
  if (!(thermal_rate > 0.0))
    throw BadParams("random_state: thermal_rate must be > 0");
  std::mt19937_64 rng(seed);

  std::exponential_distribution<double> exp_dist(thermal_rate);
  Eigen::VectorXd nu(2 * modes);
  for (int k = 0; k < modes; ++k) {
    const double v = 1.0 + exp_dist(rng);
    nu(2 * k) = v;
    nu(2 * k + 1) = v;
  }

  const Eigen::MatrixXd s = random_symplectic(modes, rng, squeeze_max);
  const Eigen::MatrixXd cov = s * nu.asDiagonal() * s.transpose();

  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd mean(2 * modes);
  for (int i = 0; i < 2 * modes; ++i) mean(i) = gauss(rng);

  return make_state(mean, cov);
}

}  // namespace qepi
