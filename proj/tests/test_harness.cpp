#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "qepi/errors.hpp"
#include "qepi/gfunction.hpp"
#include "qepi/harness.hpp"
#include "qepi/io.hpp"
#include "qepi/phase_space.hpp"
#include "qepi/rng.hpp"

using namespace qepi;

namespace {

long double g_long(long double x) {
  return (x + 1.0L) * std::log(x + 1.0L) - x * std::log(x);
}

std::string records_digest(const std::vector<EPICheckRecord>& records) {
  std::string all;
  for (const auto& r : records) {
    all += record_to_jsonl(r);
    all += '\n';
  }
  return all;
}

}  // namespace

TEST_CASE("kappa admissibility") {
  CHECK(kappa_admissible(2.0, 1.5));
  CHECK(kappa_admissible(2.0, 1.5 - 1e-13));
  CHECK_FALSE(kappa_admissible(2.0, 1.49));
  CHECK(kappa_admissible(3.0, 6.0));
  CHECK_FALSE(kappa_admissible(3.0, 1.0));
}

TEST_CASE("young triple validation") {
  CHECK_NOTHROW(require_young_triple(4.0 / 3.0, 4.0 / 3.0, 2.0));
  CHECK_NOTHROW(require_young_triple(2.0, 1.0, 2.0));
  CHECK_THROWS_AS(require_young_triple(2.0, 2.0, 2.0), BadTriple);
  CHECK_THROWS_AS(require_young_triple(0.9, 4.0 / 3.0, 2.0), BadTriple);
}

TEST_CASE("entropy power inequality checks") {
  SUBCASE("identical inputs sit exactly on the linear boundary") {
    const GaussianState x = random_state(2, 4242);
    InequalityParams params;
    params.p = 2.0;
    params.tau = 0.3;
    params.kappa = 1.0;
    for (EntropyFunctional f :
         {EntropyFunctional::wehrl, EntropyFunctional::wigner_renyi}) {
      const EPICheckRecord rec = epi_check(f, x, x, params);
      CHECK(std::abs(rec.slack) <= 1e-12 * std::max(1.0, std::abs(rec.lhs)));
      CHECK(rec.pass);
      CHECK(rec.x_fingerprint == rec.y_fingerprint);
      CHECK(rec.x_fingerprint.size() == 16);
    }
  }
  SUBCASE("normalized slack on identical inputs grows with kappa") {
    const GaussianState x = random_state(1, 777);
    InequalityParams params;
    params.p = 2.0;
    params.tau = 0.3;
    double previous = -1.0;
    for (double kappa : {1.0, 1.5, 2.0, 3.0, 6.0}) {
      params.kappa = kappa;
      const EPICheckRecord rec =
          epi_check(EntropyFunctional::wehrl, x, x, params);
      const double normalized = rec.slack / rec.lhs;
      const double expected =
          1.0 - (std::pow(params.tau, kappa) + std::pow(1.0 - params.tau, kappa));
      CHECK(normalized == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
      CHECK(normalized >= previous - 1e-12);
      previous = normalized;
    }
  }
  SUBCASE("random battery passes at the minimal and inflated exponents") {
    InequalityParams params;
    params.tau = 0.35;
    for (double p : {1.5, 2.0, 3.0}) {
      params.p = p;
      for (double kappa : {0.5 * (p + 1.0), 2.0 * (p + 1.0)}) {
        params.kappa = kappa;
        for (int trial = 0; trial < 25; ++trial) {
          const GaussianState x = random_state(2, derive_seed(880, 2 * trial));
          const GaussianState y =
              random_state(2, derive_seed(880, 2 * trial + 1));
          for (EntropyFunctional f :
               {EntropyFunctional::wehrl, EntropyFunctional::wigner_renyi}) {
            const EPICheckRecord rec = epi_check(f, x, y, params);
            CHECK(rec.pass);
            CHECK(rec.kappa_admissible);
            CHECK(rec.modes == 2);
          }
        }
      }
    }
  }
  SUBCASE("functional labels") {
    const GaussianState x = random_state(1, 3);
    InequalityParams params;
    CHECK(epi_check(EntropyFunctional::wehrl, x, x, params).functional ==
          "wehrl");
    CHECK(epi_check(EntropyFunctional::wigner_renyi, x, x, params).functional ==
          "wigner");
  }
  SUBCASE("parameter gating") {
    const GaussianState x = random_state(1, 5);
    const GaussianState y2 = random_state(2, 6);
    InequalityParams params;
    CHECK_THROWS_AS(
        epi_check(EntropyFunctional::wehrl, x, y2, params), ModeMismatch);
    params.tau = 0.0;
    CHECK_THROWS_AS(epi_check(EntropyFunctional::wehrl, x, x, params), BadTau);
    params.tau = 0.5;
    params.p = 0.5;
    CHECK_THROWS_AS(epi_check(EntropyFunctional::wehrl, x, x, params),
                    BadOrder);
    params.allow_experimental_order = true;
    CHECK_NOTHROW(epi_check(EntropyFunctional::wehrl, x, x, params));
    params.p = 2.0;
    params.kappa = 0.0;
    CHECK_THROWS_AS(epi_check(EntropyFunctional::wehrl, x, x, params),
                    BadParams);
    params.kappa = 1.5;
    CHECK_THROWS_AS(
        epi_check(EntropyFunctional::classical_renyi, x, x, params),
        BadParams);
  }
}

TEST_CASE("photon number superadditivity check") {
  SUBCASE("thermal pairs are the equality case") {
    const EPICheckRecord rec = epni_check(thermal(0.8, 2), thermal(2.5, 2), 0.4);
    CHECK(rec.functional == "epni");
    CHECK(std::abs(rec.slack) <= 1e-9);
    CHECK(rec.pass);
    CHECK(rec.lhs == doctest::Approx(0.4 * 0.8 + 0.6 * 2.5).epsilon(1e-9));
  }
  SUBCASE("random pairs never violate") {
    for (int trial = 0; trial < 30; ++trial) {
      const int modes = 1 + trial % 2;
      const GaussianState x = random_state(modes, derive_seed(901, 2 * trial));
      const GaussianState y =
          random_state(modes, derive_seed(901, 2 * trial + 1));
      const EPICheckRecord rec = epni_check(x, y, 0.25 + 0.5 * (trial / 29.0));
      CHECK(rec.pass);
    }
  }
  SUBCASE("gating") {
    CHECK_THROWS_AS(epni_check(vacuum(1), vacuum(2), 0.5), ModeMismatch);
    CHECK_THROWS_AS(epni_check(vacuum(1), vacuum(1), 1.0), BadTau);
  }
}

TEST_CASE("sharp young constant") {
  CHECK(young_constant(1.0, 1.0, 1.0) == 1.0);
  CHECK(young_constant(4.0 / 3.0, 4.0 / 3.0, 2.0) ==
        doctest::Approx(0.7698003589195010).epsilon(1e-14));
  CHECK_THROWS_AS(young_constant(2.0, 2.0, 2.0), BadTriple);
  // K <= 1 across a sweep of admissible triples built from (r, t)
  for (double t : {1.5, 2.0, 3.0, 5.0}) {
    for (int i = 1; i <= 9; ++i) {
      const double inv_r = 1.0 / t + (1.0 - 1.0 / t) * i / 10.0;
      const double r = 1.0 / inv_r;
      const double inv_s = 1.0 + 1.0 / t - 1.0 / r;
      const double s = 1.0 / inv_s;
      CHECK(young_constant(r, s, t) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("young convolution inequality records") {
  SUBCASE("the all-ones triple is an exact equality") {
    const PhaseSpaceGaussian f = wigner_of(random_state(1, 11));
    const PhaseSpaceGaussian g = wigner_of(random_state(1, 12));
    const YoungCheckRecord rec = young_check(f, g, 1.0, 1.0, 1.0);
    CHECK(rec.lhs_plain == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rec.rhs_base == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rec.constant_k == 1.0);
    CHECK(rec.plain_holds_full);
    CHECK(rec.plain_holds_half);
    CHECK(rec.power_mixed_holds);
    CHECK(rec.power_lhs == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("full-dimension exponent holds across random pairs and triples") {
    const double triples[][3] = {{4.0 / 3.0, 4.0 / 3.0, 2.0},
                                 {1.2, 1.5, 2.0},
                                 {2.0, 1.0, 2.0},
                                 {1.5, 1.5, 3.0}};
    for (const auto& rst : triples) {
      for (int trial = 0; trial < 10; ++trial) {
        const int modes = 1 + trial % 2;
        const PhaseSpaceGaussian f =
            wigner_of(random_state(modes, derive_seed(902, 2 * trial)));
        const PhaseSpaceGaussian g =
            wigner_of(random_state(modes, derive_seed(902, 2 * trial + 1)));
        const YoungCheckRecord rec =
            young_check(f, g, rst[0], rst[1], rst[2], 0.5);
        CHECK(rec.plain_holds_full);
        CHECK(rec.plain_holds_half);
        CHECK(rec.dims == 2 * modes);
        CHECK(rec.constant_k <= 1.0 + 1e-12);
      }
    }
  }
  SUBCASE("standard normals meet the constant with equality") {
    const PhaseSpaceGaussian phi = make_density(Eigen::VectorXd::Zero(2),
                                                Eigen::MatrixXd::Identity(2, 2));
    const YoungCheckRecord rec = young_check(phi, phi, 4.0 / 3.0, 4.0 / 3.0, 2.0);
    CHECK(rec.lhs_plain ==
          doctest::Approx(rec.rhs_full_exponent).epsilon(1e-12));
  }
  SUBCASE("gating") {
    const PhaseSpaceGaussian f = wigner_of(random_state(1, 13));
    const PhaseSpaceGaussian g2 = wigner_of(random_state(2, 14));
    CHECK_THROWS_AS(young_check(f, g2, 4.0 / 3.0, 4.0 / 3.0, 2.0),
                    DimensionMismatch);
    CHECK_THROWS_AS(young_check(f, f, 4.0 / 3.0, 4.0 / 3.0, 2.0, 0.0), BadTau);
    CHECK_THROWS_AS(young_check(f, f, 2.0, 2.0, 2.0), BadTriple);
  }
}

TEST_CASE("homogeneity search for the sharp-constant lemma") {
  SUBCASE("symmetric split at t = 2") {
    const HomogeneitySearchResult res = lemma1_search(2.0, 0.25, 0.25);
    CHECK(res.pass);
    CHECK(res.threshold == doctest::Approx(0.5).epsilon(1e-15));
    // maximum value 81 sqrt(3) / 256, attained at r = s = 4/3
    CHECK(res.lhs_max == doctest::Approx(0.5480316983232127).epsilon(1e-6));
  }
  SUBCASE("asymmetric splits pass across t") {
    for (double t : {1.5, 2.0, 3.0}) {
      const double total = 1.0 - 1.0 / t;
      for (double frac : {0.1, 0.5, 0.9}) {
        const HomogeneitySearchResult res =
            lemma1_search(t, frac * total, (1.0 - frac) * total);
        CHECK(res.pass);
        CHECK(res.lhs_max >= res.threshold * (1.0 - 1e-9));
      }
    }
  }
  SUBCASE("extreme split stays finite") {
    const double b = 1e-9;
    const HomogeneitySearchResult res = lemma1_search(2.0, 0.5 - b, b);
    CHECK(std::isfinite(res.lhs_max));
    CHECK(res.lhs_max >= 0.5 - 1e-8);
  }
  SUBCASE("gating") {
    CHECK_THROWS_AS(lemma1_search(1.0, 0.5, 0.5), BadParams);
    CHECK_THROWS_AS(lemma1_search(2.0, -0.1, 0.6), BadParams);
    CHECK_THROWS_AS(lemma1_search(2.0, 0.3, 0.3), ConstraintViolated);
  }
}

TEST_CASE("two-variable product minimization") {
  SUBCASE("boundary coefficient puts the minimum at the endpoints") {
    const CalculusScanResult res = lemma2_minimize(0.5, 3.0);
    CHECK(res.location == MinLocation::left_end);
    CHECK(std::abs(res.x_min) <= 1e-7);
    const CalculusScanResult res2 = lemma2_minimize(0.3, 2.0 / 0.3 - 1.0);
    CHECK((res2.location == MinLocation::left_end ||
           res2.location == MinLocation::right_end));
  }
  SUBCASE("large coefficient moves the minimum to the center") {
    const CalculusScanResult res = lemma2_minimize(0.5, 10.0);
    CHECK(res.location == MinLocation::center);
    CHECK(res.x_min == doctest::Approx(0.25).epsilon(1e-6));
  }
  SUBCASE("the minimizer always lands on a named point") {
    // sweep a grid; every minimizer must classify onto {0, c/2, c}
    for (int ci = 1; ci <= 8; ++ci) {
      const double c = ci / 10.0;
      const double d_boundary = 2.0 / c - 1.0;
      for (int dj = 0; dj < 4; ++dj) {
        const double d = d_boundary * (1.0 + 0.7 * dj);
        const CalculusScanResult res = lemma2_minimize(c, d);
        CHECK(res.location != MinLocation::other);
      }
    }
  }
  SUBCASE("gating") {
    CHECK_THROWS_AS(lemma2_minimize(0.0, 5.0), BadDomain);
    CHECK_THROWS_AS(lemma2_minimize(1.0, 5.0), BadDomain);
    CHECK_THROWS_AS(lemma2_minimize(0.5, 2.9), BadDomain);
  }
}

TEST_CASE("capacity bounds") {
  SUBCASE("quiet environment closes the gap") {
    const double ub = capacity_upper_bound(0.5, 2.0, 0.0);
    const double lb = holevo_lower_bound(0.5, 2.0, 0.0);
    CHECK(ub == doctest::Approx(g_function(1.0)).epsilon(1e-12));
    CHECK(ub - lb == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  }
  SUBCASE("reference point against extended-precision evaluation") {
    const double ub = capacity_upper_bound(0.7, 5.0, 0.5);
    const long double expected = g_long(3.65L) - 0.3L * g_long(0.5L);
    CHECK(ub == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
  }
  SUBCASE("lower bound never exceeds upper bound") {
    for (int i = 1; i <= 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) {
          const double tau = i / 5.0;
          const double n = 2.0 * j;
          const double ne = 0.6 * k;
          CHECK(holevo_lower_bound(tau, n, ne) <=
                capacity_upper_bound(tau, n, ne) + 1e-12);
        }
  }
  SUBCASE("monotone in the input photon number") {
    CHECK(capacity_upper_bound(0.6, 4.0, 0.3) >
          capacity_upper_bound(0.6, 3.0, 0.3));
  }
  SUBCASE("gating") {
    CHECK_THROWS_AS(capacity_upper_bound(0.0, 1.0, 0.0), BadTau);
    CHECK_THROWS_AS(capacity_upper_bound(1.1, 1.0, 0.0), BadTau);
    CHECK_THROWS_AS(capacity_upper_bound(0.5, -1.0, 0.0),
                    NegativeMeanPhotons);
    CHECK_THROWS_AS(holevo_lower_bound(0.5, 1.0, -0.2), NegativeMeanPhotons);
    CHECK_NOTHROW(capacity_upper_bound(1.0, 1.0, 1.0));
  }
}

TEST_CASE("entanglement witness") {
  const double ln3 = std::log(3.0);
  SUBCASE("vacuum product input shows no flags") {
    const WitnessRecord rec =
        entanglement_witness(tensor_product(vacuum(1), vacuum(1)), 2.0);
    CHECK(rec.zeta == 2.0);
    CHECK(rec.entropy_threshold == doctest::Approx(ln3).epsilon(1e-14));
    CHECK(rec.purity_threshold == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(rec.output_entropy ==
          doctest::Approx(g_function(1.0)).epsilon(1e-12));
    CHECK_FALSE(rec.entropy_flag);
    // the vacuum sits exactly on the purity boundary; check the value, not
    // the flag, which is sensitive to the last bit
    CHECK(std::abs(rec.output_purity - 1.0 / 3.0) <= 1e-12);
    CHECK_FALSE(rec.conjectural);
  }
  SUBCASE("the tuned two-mode squeezed input fires every flag") {
    const double r_star = 0.5 * std::atanh(2.0 * std::sqrt(2.0) / 3.0);
    const WitnessRecord rec =
        entanglement_witness(two_mode_squeezed_vacuum(r_star), 2.0, 2.0);
    CHECK(rec.entropy_flag);
    CHECK(rec.purity_flag);
    CHECK(rec.output_entropy <= 1e-9);
    CHECK(rec.entropy_threshold - rec.output_entropy > 1.0);
    CHECK(rec.renyi_order == 2.0);
    CHECK(rec.output_renyi_entropy <= 1e-9);
    CHECK(rec.renyi_flag);
    CHECK(rec.conjectural);
  }
  SUBCASE("random product inputs never fire") {
    for (double zeta : {1.5, 2.0, 4.0}) {
      for (int trial = 0; trial < 50; ++trial) {
        const GaussianState a = random_state(1, derive_seed(903, 2 * trial));
        const GaussianState b =
            random_state(1, derive_seed(903, 2 * trial + 1));
        const WitnessRecord rec =
            entanglement_witness(tensor_product(a, b), zeta);
        CHECK_FALSE(rec.entropy_flag);
        CHECK_FALSE(rec.purity_flag);
      }
    }
  }
  SUBCASE("gating") {
    CHECK_THROWS_AS(entanglement_witness(vacuum(2), 1.0), BadGain);
    CHECK_THROWS_AS(entanglement_witness(vacuum(3), 2.0), ModeMismatch);
  }
}

TEST_CASE("battery configuration validation") {
  BatteryConfig base;
  CHECK_NOTHROW(validate_config(base));

  BatteryConfig bad = base;
  bad.functionals = {EntropyFunctional::classical_renyi};
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad = base;
  bad.modes = {0};
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad = base;
  bad.orders = {0.5};
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad.experimental_orders = true;
  CHECK_NOTHROW(validate_config(bad));
  bad = base;
  bad.taus = {1.0};
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad = base;
  bad.kappa_offset = -0.1;
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad = base;
  bad.kappa_mode = KappaMode::fixed;
  bad.kappa_fixed = 0.0;
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad = base;
  bad.trials_per_cell = -1;
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad = base;
  bad.threads = 0;
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad = base;
  bad.taus = {};
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
  bad = base;
  bad.thermal_rate = 0.0;
  CHECK_THROWS_AS(validate_config(bad), ConfigInvalid);
}

TEST_CASE("battery runs") {
  BatteryConfig config;
  config.modes = {1};
  config.orders = {2.0};
  config.taus = {0.5};
  config.trials_per_cell = 40;
  config.seed = 20240;

  SUBCASE("zero trials yield empty records and zeroed summaries") {
    BatteryConfig empty = config;
    empty.trials_per_cell = 0;
    const BatteryResult res = run_battery(empty);
    CHECK(res.records.empty());
    CHECK(res.failures == 0);
    REQUIRE(res.summary.size() == 2);
    for (const auto& row : res.summary) {
      CHECK(row.trials == 0);
      CHECK(row.failures == 0);
      CHECK(row.min_slack == 0.0);
    }
  }
  SUBCASE("small run passes and is reproducible across thread counts") {
    const BatteryResult serial = run_battery(config);
    CHECK(serial.failures == 0);
    CHECK(serial.records.size() == 80);
    REQUIRE(serial.summary.size() == 2);
    CHECK(serial.summary[0].trials == 40);
    CHECK(serial.summary[0].kappa == doctest::Approx(1.5));

    BatteryConfig threaded = config;
    threaded.threads = 4;
    const BatteryResult parallel = run_battery(threaded);
    CHECK(records_digest(serial.records) == records_digest(parallel.records));

    const BatteryResult again = run_battery(config);
    CHECK(records_digest(serial.records) == records_digest(again.records));
  }
  SUBCASE("the swapped mixing convention relabels tau") {
    BatteryConfig eq5 = config;
    eq5.taus = {0.7};
    BatteryConfig eq9 = config;
    eq9.taus = {0.3};
    eq9.convention = MixConvention::eq9;
    const BatteryResult a = run_battery(eq5);
    const BatteryResult b = run_battery(eq9);
    CHECK(records_digest(a.records) == records_digest(b.records));
    REQUIRE(!b.summary.empty());
    CHECK(b.summary[0].tau == doctest::Approx(0.7));
  }
  SUBCASE("photon-number battery") {
    BatteryConfig epni = config;
    epni.modes = {1, 2};
    epni.taus = {0.3, 0.7};
    epni.trials_per_cell = 25;
    const BatteryResult res = run_epni_battery(epni);
    CHECK(res.failures == 0);
    CHECK(res.records.size() == 2 * 2 * 25);
    CHECK(res.summary.size() == 4);
    for (const auto& rec : res.records) CHECK(rec.functional == "epni");
  }
}
