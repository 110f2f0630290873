#include "qepi/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qepi/errors.hpp"

namespace qepi {

Eigen::MatrixXd symplectic_form(int modes) {
  if (modes < 1) throw DimensionMismatch("symplectic_form: modes must be >= 1");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

SymplecticSpectrum symplectic_spectrum_of_cov(const Eigen::MatrixXd& cov,
                                              double pairing_tol) {
  const auto n = cov.rows();
  if (n != cov.cols() || n % 2 != 0 || n < 2)
    throw DimensionMismatch("symplectic spectrum: covariance must be 2D x 2D");
  const int modes = static_cast<int>(n) / 2;

  Eigen::MatrixXd a = symplectic_form(modes) * cov;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw PairingFailed("symplectic spectrum: eigenvalue iteration failed");

  std::vector<std::complex<double>> plus, minus;
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::complex<double> lam = solver.eigenvalues()(i);
    const double scale = std::max(1.0, std::abs(lam));
    if (std::abs(lam.real()) > pairing_tol * scale)
      throw PairingFailed("symplectic spectrum: eigenvalue has a non-negligible real part");
    if (lam.imag() > 0.0)
      plus.push_back(lam);
    else if (lam.imag() < 0.0)
      minus.push_back(lam);
    else
      throw PairingFailed("symplectic spectrum: purely real eigenvalue");
  }
  if (static_cast<int>(plus.size()) != modes || static_cast<int>(minus.size()) != modes)
    throw PairingFailed("symplectic spectrum: eigenvalues do not split into conjugate halves");

  auto by_modulus = [](const std::complex<double>& x, const std::complex<double>& y) {
    return std::abs(x) < std::abs(y);
  };
  std::sort(plus.begin(), plus.end(), by_modulus);
  std::sort(minus.begin(), minus.end(), by_modulus);

  SymplecticSpectrum spec;
  spec.values.reserve(modes);
  for (int k = 0; k < modes; ++k) {
    const double scale = std::max(1.0, std::abs(plus[k]));
    if (std::abs(plus[k] - std::conj(minus[k])) > pairing_tol * scale)
      throw PairingFailed("symplectic spectrum: conjugate pairing beyond tolerance");
    spec.values.push_back(0.5 * (std::abs(plus[k]) + std::abs(minus[k])));
  }
  std::sort(spec.values.begin(), spec.values.end());
  return spec;
}

namespace {

// Haar unitary via QR of a complex Ginibre matrix with the usual phase fix.
Eigen::MatrixXcd haar_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd z(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = std::complex<double>(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    std::complex<double> diag = r(j, j);
    const double mag = std::abs(diag);
    const std::complex<double> phase = mag > 0.0 ? diag / mag : std::complex<double>(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

}  // namespace

Eigen::MatrixXd random_orthogonal_symplectic(int modes, std::mt19937_64& rng) {
  if (modes < 1)
    throw DimensionMismatch("random_orthogonal_symplectic: modes must be >= 1");
  const Eigen::MatrixXcd u = haar_unitary(modes, rng);
  const Eigen::MatrixXd x = u.real();
  const Eigen::MatrixXd y = u.imag();

  // Build in (q..., p...) block ordering, then permute to interleaved.
  Eigen::MatrixXd k(2 * modes, 2 * modes);
  k.topLeftCorner(modes, modes) = x;
  k.topRightCorner(modes, modes) = -y;
  k.bottomLeftCorner(modes, modes) = y;
  k.bottomRightCorner(modes, modes) = x;

  auto to_block = [modes](int i) { return (i % 2 == 0) ? i / 2 : modes + i / 2; };
  Eigen::MatrixXd s(2 * modes, 2 * modes);
  for (int i = 0; i < 2 * modes; ++i)
    for (int j = 0; j < 2 * modes; ++j) s(i, j) = k(to_block(i), to_block(j));
  return s;
}

Eigen::MatrixXd random_symplectic(int modes, std::mt19937_64& rng,
                                  double squeeze_max) {
  if (squeeze_max < 0.0)
    throw BadParams("random_symplectic: squeeze_max must be >= 0");
  const Eigen::MatrixXd o1 = random_orthogonal_symplectic(modes, rng);
  std::uniform_real_distribution<double> uni(-squeeze_max, squeeze_max);
  Eigen::VectorXd scale(2 * modes);
  for (int k = 0; k < modes; ++k) {
    const double z = uni(rng);
    scale(2 * k) = std::exp(z);
    scale(2 * k + 1) = std::exp(-z);
  }
  const Eigen::MatrixXd o2 = random_orthogonal_symplectic(modes, rng);
  return o1 * scale.asDiagonal() * o2;
}

}  // namespace qepi
