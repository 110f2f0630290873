#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qepi/channels.hpp"
#include "qepi/errors.hpp"
#include "qepi/gaussian_state.hpp"
#include "qepi/gfunction.hpp"
#include "qepi/rng.hpp"

using namespace qepi;

TEST_CASE("beam splitter mixing") {
  SUBCASE("thermal states are closed under mixing") {
    const double tau = 0.25, n1 = 0.5, n2 = 2.0;
    const GaussianState out =
        beam_splitter_mix(thermal(n1, 2), thermal(n2, 2), tau);
    const GaussianState expected = thermal(tau * n1 + (1.0 - tau) * n2, 2);
    CHECK((out.cov - expected.cov).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(out.mean.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("near-unit transmissivity approaches the identity channel") {
    const GaussianState x = random_state(2, 881);
    const GaussianState y = random_state(2, 882);
    const GaussianState out = beam_splitter_mix(x, y, 1.0 - 1e-9);
    CHECK((out.cov - x.cov).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK((out.mean - x.mean).cwiseAbs().maxCoeff() <= 5e-5);
  }
  SUBCASE("parameter validation") {
    const GaussianState a = vacuum(1);
    const GaussianState b = vacuum(2);
    CHECK_THROWS_AS(beam_splitter_mix(a, a, 0.0), BadTau);
    CHECK_THROWS_AS(beam_splitter_mix(a, a, 1.0), BadTau);
    CHECK_THROWS_AS(beam_splitter_mix(a, b, 0.5), ModeMismatch);
  }
  SUBCASE("outputs stay physical across a random battery") {
    for (int trial = 0; trial < 3000; ++trial) {
      const double tau = 0.05 + 0.9 * (trial % 19) / 18.0;
      const GaussianState x = random_state(1, derive_seed(511, 2 * trial));
      const GaussianState y = random_state(1, derive_seed(511, 2 * trial + 1));
      const GaussianState z = beam_splitter_mix(x, y, tau);
      const SymplecticSpectrum nu = symplectic_eigenvalues(z);
      CHECK(*std::min_element(nu.values.begin(), nu.values.end()) >=
            1.0 - 1e-9);
    }
  }
}

TEST_CASE("amplifier") {
  const double zeta = 2.0;
  SUBCASE("vacuum inputs give the symmetric thermal output") {
    const GaussianState out = amplifier_mix(vacuum(1), vacuum(1), zeta);
    CHECK((out.cov - 3.0 * Eigen::MatrixXd::Identity(2, 2))
              .cwiseAbs()
              .maxCoeff() <= 1e-14);
    CHECK(von_neumann_entropy(out) ==
          doctest::Approx(g_function(1.0)).epsilon(1e-12));
  }
  SUBCASE("the joint form reduces to the product form on product inputs") {
    for (int modes : {1, 2}) {
      for (int trial = 0; trial < 20; ++trial) {
        const GaussianState a =
            random_state(modes, derive_seed(512, 2 * trial));
        const GaussianState b =
            random_state(modes, derive_seed(512, 2 * trial + 1));
        const GaussianState via_joint =
            amplifier_joint(tensor_product(a, b), zeta);
        const GaussianState direct = amplifier_mix(a, b, zeta);
        CHECK((via_joint.cov - direct.cov).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((via_joint.mean - direct.mean).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
  SUBCASE("the tuned two-mode squeezed input amplifies to the vacuum") {
    // cosh(alpha) = sqrt(2) and r = alpha make the output exactly vacuum:
    // r* = atanh(2 sqrt(2) / 3) / 2.
    const double r_star = 0.5 * std::atanh(2.0 * std::sqrt(2.0) / 3.0);
    const GaussianState out =
        amplifier_joint(two_mode_squeezed_vacuum(r_star), zeta);
    CHECK((out.cov - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-12);
    CHECK(von_neumann_entropy(out) <= 1e-9);
  }
  SUBCASE("parameter validation") {
    const GaussianState a = vacuum(1);
    CHECK_THROWS_AS(amplifier_mix(a, a, 1.0), BadGain);
    CHECK_THROWS_AS(amplifier_mix(a, a, 0.5), BadGain);
    CHECK_THROWS_AS(amplifier_mix(a, vacuum(2), 2.0), ModeMismatch);
    CHECK_THROWS_AS(amplifier_joint(vacuum(3), 2.0), ModeMismatch);
    CHECK_THROWS_AS(amplifier_joint(two_mode_squeezed_vacuum(0.5), 1.0),
                    BadGain);
  }
  SUBCASE("outputs stay physical") {
    for (double gain : {1.2, 2.0, 5.0}) {
      for (int trial = 0; trial < 200; ++trial) {
        const GaussianState a = random_state(1, derive_seed(513, 2 * trial));
        const GaussianState b =
            random_state(1, derive_seed(513, 2 * trial + 1));
        const GaussianState z = amplifier_mix(a, b, gain);
        const auto nu = symplectic_eigenvalues(z).values;
        CHECK(*std::min_element(nu.begin(), nu.end()) >= 1.0 - 1e-9);
      }
    }
  }
}

TEST_CASE("thermal noise channel") {
  const double tau = 0.7, mean_photons = 5.0, env_photons = 0.5;
  const GaussianState out =
      thermal_noise_channel(thermal(mean_photons, 1), tau, env_photons);
  const double expected_photons =
      tau * mean_photons + (1.0 - tau) * env_photons;
  CHECK(von_neumann_entropy(out) ==
        doctest::Approx(g_function(expected_photons)).epsilon(1e-12));
  CHECK_THROWS_AS(thermal_noise_channel(vacuum(1), 0.0, 0.5), BadTau);
  CHECK_THROWS_AS(thermal_noise_channel(vacuum(1), 0.5, -0.1),
                  NegativeMeanPhotons);
}
