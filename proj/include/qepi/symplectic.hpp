#pragma once

#include <Eigen/Dense>
#include <random>
#include <vector>

namespace qepi {

/// Symplectic form Omega for D modes in (q1, p1, ..., qD, pD) ordering:
/// a block-diagonal stack of ((0, 1), (-1, 0)). Antisymmetric and
/// Omega * Omega = -I.
Eigen::MatrixXd symplectic_form(int modes);

/// The D Williamson invariants nu_k of a covariance matrix, sorted ascending.
/// A physical covariance has every nu_k >= 1.
struct SymplecticSpectrum {
  std::vector<double> values;
};

/// Moduli of the eigenvalues of Omega * cov. For a symmetric covariance they
/// come in +/- i*nu pairs; pairing is checked at `pairing_tol` relative and
/// PairingFailed is thrown when it breaks down.
SymplecticSpectrum symplectic_spectrum_of_cov(const Eigen::MatrixXd& cov,
                                              double pairing_tol = 1e-9);

/// Haar-random element of the orthogonal symplectic group (the real image of
/// a Haar-random D x D unitary).
Eigen::MatrixXd random_orthogonal_symplectic(int modes, std::mt19937_64& rng);

/// Random symplectic via the Euler decomposition O1 * Z * O2 with O1, O2
/// orthogonal symplectic and Z per-mode squeezers diag(e^z, e^-z),
/// z uniform in [-squeeze_max, squeeze_max].
Eigen::MatrixXd random_symplectic(int modes, std::mt19937_64& rng,
                                  double squeeze_max);

}  // namespace qepi
