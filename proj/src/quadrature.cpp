#include "qepi/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qepi/errors.hpp"

namespace qepi {

namespace {

// Cached Cholesky evaluator; avoids refactorizing inside quadrature loops.
struct DensityEvaluator {
  Eigen::VectorXd mean;
  Eigen::MatrixXd chol_l;      // sigma = L L^T
  double log_norm;

  explicit DensityEvaluator(const PhaseSpaceGaussian& g) : mean(g.mean) {
    Eigen::LLT<Eigen::MatrixXd> llt(g.sigma);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("quadrature: sigma is not positive definite");
    chol_l = llt.matrixL();
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < chol_l.rows(); ++i)
      log_det += 2.0 * std::log(chol_l(i, i));
    log_norm = -0.5 * (g.mean.size() * std::log(2.0 * std::numbers::pi) + log_det);
  }

  double operator()(const Eigen::VectorXd& x) const {
    const Eigen::VectorXd z =
        chol_l.triangularView<Eigen::Lower>().solve(x - mean);
    return std::exp(log_norm - 0.5 * z.squaredNorm());
  }
};

double tensor_gauss_hermite_lp(const PhaseSpaceGaussian& g, double p, int nodes) {
  const int n = g.dims;
  const auto [t, w] = gauss_hermite(nodes);
  const DensityEvaluator density(g);

  // x = mean + sqrt(2) L y maps the weight exp(-|y|^2) onto the density's own
  // Gaussian decay; the integrand g^p e^{|y|^2} then falls like e^{-(p-1)|y|^2}.
  const Eigen::MatrixXd scaled_l = std::sqrt(2.0) * density.chol_l;
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < density.chol_l.rows(); ++i)
    log_det += std::log(density.chol_l(i, i));
  const double jacobian = std::exp(0.5 * n * std::log(2.0) + log_det);

  std::vector<int> idx(n, 0);
  Eigen::VectorXd y(n), x(n);
  double acc = 0.0;
  while (true) {
    double weight = 1.0;
    double y_sq = 0.0;
    for (int d = 0; d < n; ++d) {
      y(d) = t(idx[d]);
      weight *= w(idx[d]);
      y_sq += y(d) * y(d);
    }
    x = g.mean + scaled_l * y;
    const double f = density(x);
    acc += weight * std::exp(p * std::log(f) + y_sq);

    int d = 0;
    for (; d < n; ++d) {
      if (++idx[d] < nodes) break;
      idx[d] = 0;
    }
    if (d == n) break;
  }
  return acc * jacobian;
}

double monte_carlo_lp(const PhaseSpaceGaussian& g, double p, long samples,
                      std::uint64_t seed) {
  const DensityEvaluator density(g);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd z(g.dims), x(g.dims);
  double acc = 0.0;
  // integral g^p = E_{x ~ g}[ g(x)^(p-1) ]
  for (long i = 0; i < samples; ++i) {
    for (int d = 0; d < g.dims; ++d) z(d) = gauss(rng);
    x = g.mean + density.chol_l * z;
    acc += std::exp((p - 1.0) * std::log(density(x)));
  }
  return acc / static_cast<double>(samples);
}

}  // namespace

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_hermite(int n) {
  if (n < 1) throw BadParams("gauss_hermite: node count must be >= 1");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(0.5 * k);
    j(k - 1, k) = b;
    j(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(j);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("gauss_hermite: eigenvalue iteration failed");
  Eigen::VectorXd nodes = solver.eigenvalues();
  Eigen::VectorXd weights(n);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < n; ++i) {
    const double v = solver.eigenvectors()(0, i);
    weights(i) = sqrt_pi * v * v;
  }
  return {nodes, weights};
}

double lp_norm_quadrature(const PhaseSpaceGaussian& g, double p,
                          const QuadratureSpec& spec) {
  if (!(p >= 1.0))
    throw BadOrder("lp_norm_quadrature: order must satisfy p >= 1");
  double integral = 0.0;
  switch (spec.scheme) {
    case QuadratureScheme::tensor_gauss_hermite:
      if (g.dims > 4)
        throw SchemeUnsupported(
            "lp_norm_quadrature: tensor scheme is limited to 4 dimensions");
      if (spec.nodes_per_axis < 8)
        throw BadParams("lp_norm_quadrature: nodes_per_axis must be >= 8");
      integral = tensor_gauss_hermite_lp(g, p, spec.nodes_per_axis);
      break;
    case QuadratureScheme::monte_carlo:
      if (spec.sample_count < 10'000)
        throw BadParams("lp_norm_quadrature: sample_count must be >= 10000");
      integral = monte_carlo_lp(g, p, spec.sample_count, spec.seed);
      break;
  }
  return std::exp(std::log(integral) / p);
}

}  // namespace qepi
