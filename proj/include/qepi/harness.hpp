#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qepi/channels.hpp"
#include "qepi/entropy.hpp"
#include "qepi/gaussian_state.hpp"

namespace qepi {

// Which of the two mixing-weight readings the harness applies: eq5 puts
// weight tau on the first input (the default); eq9 swaps tau and 1 - tau.
enum class MixConvention { eq5, eq9 };

/// Scalar dials shared by the inequality checks. Only the fields an op uses
/// are read by it; validators below police the documented constraints.
struct InequalityParams {
  double p = 2.0;
  double kappa = 1.5;
  double tau = 0.5;
  bool allow_experimental_order = false;  // admit p <= 1 when set
};

/// kappa >= (p + 1)/2 within 1e-12.
bool kappa_admissible(double p, double kappa);

/// Throws BadTriple unless r, s, t >= 1 and |1/r + 1/s - 1/t - 1| <= 1e-12.
void require_young_triple(double r, double s, double t);

/// One verified instance of the entropy-power inequality
/// V^kappa(Z) >= tau^kappa V^kappa(X) + (1-tau)^kappa V^kappa(Y).
/// pass means slack >= -1e-9 * max(1, |lhs|). Borderline negative slack is
/// re-evaluated in extended precision before being reported.
struct EPICheckRecord {
  std::string functional;  // "wehrl", "wigner", or "epni"
  int modes = 0;
  double p = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  bool kappa_admissible = false;
  bool reevaluated = false;
  std::uint64_t seed = 0;
  std::string x_fingerprint;
  std::string y_fingerprint;
};

/// Entropy-power inequality check for the wehrl or wigner_renyi functional.
EPICheckRecord epi_check(EntropyFunctional functional, const GaussianState& x,
                         const GaussianState& y, const InequalityParams& params);

/// Photon-number superadditivity check (reported, not asserted):
/// N(X boxplus_tau Y) >= tau N(X) + (1-tau) N(Y) with N = g_inverse(S/D).
EPICheckRecord epni_check(const GaussianState& x, const GaussianState& y,
                          double tau);

/// Sharp convolution constant K = k_r k_s / k_t with
/// k_p = (1 - 1/p) (p^2/(p-1))^(1/p) and k_1 = 1 by its limit. K <= 1 on
/// admissible triples.
double young_constant(double r, double s, double t);

/// Norm inequality report for one Gaussian pair and one exponent triple.
/// The plain convolution obeys |f * g|_t <= K^e |f|_r |g|_s with the
/// full-dimension exponent e = D = n/2; the halved exponent e = D/2 and the
/// scaled (beam-splitter) convolution variants are recorded for comparison,
/// not asserted. Entropy-power recasts of the same statement are included.
struct YoungCheckRecord {
  int dims = 0;
  double r = 0.0, s = 0.0, t = 0.0, tau = 0.5;
  double constant_k = 0.0;
  double lhs_plain = 0.0;       // |f * g|_t
  double lhs_scaled = 0.0;      // |f boxplus_tau g|_t
  double rhs_base = 0.0;        // |f|_r |g|_s
  double rhs_half_exponent = 0.0;  // K^(D/2) rhs_base
  double rhs_full_exponent = 0.0;  // K^D rhs_base
  bool plain_holds_half = false;
  bool plain_holds_full = false;
  bool scaled_holds_half = false;
  bool scaled_holds_full = false;
  double power_lhs = 0.0;            // V_t(scaled)^(1 - 1/t)
  double power_rhs_mixed = 0.0;      // (1/K) V_r(X)^(1-1/r) V_s(Y)^(1-1/s)
  double power_rhs_mixed_weighted = 0.0;  // same with tau-weighted powers
  double power_rhs_merged = 0.0;     // (1/K) V_t(X)^(1-1/r) V_t(Y)^(1-1/s)
  bool power_mixed_holds = false;
  bool power_mixed_weighted_holds = false;
  bool power_merged_holds = false;
};

YoungCheckRecord young_check(const PhaseSpaceGaussian& gx,
                             const PhaseSpaceGaussian& gy, double r, double s,
                             double t, double tau = 0.5);

/// Maximizes K^(-kappa t/(t-1)) a^(t(r-1)/(r(t-1))) b^(t(s-1)/(s(t-1))) over
/// the one-parameter family 1/r + 1/s = 1 + 1/t, kappa = (t+1)/2, and checks
/// the maximum reaches 1 - 1/t = a + b. Coarse scan plus golden-section
/// refinement to parameter tolerance 1e-10.
struct HomogeneitySearchResult {
  double r = 1.0;
  double s = 1.0;
  double lhs_max = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

HomogeneitySearchResult lemma1_search(double t, double a, double b);

enum class MinLocation { left_end, right_end, center, other };

/// Dense scan plus local refinement of
/// F(x) = (1-x)^(d(1-x)) (1-y)^(d(1-y)) / (x^x y^y), y = c - x, on [0, c].
/// The minimizer is classified against {0, c/2, c} at tolerance 1e-6.
struct CalculusScanResult {
  double x_min = 0.0;
  double f_min = 0.0;
  MinLocation location = MinLocation::other;
};

CalculusScanResult lemma2_minimize(double c, double d);

/// Classical capacity upper bound of the thermal-noise channel:
/// g(tau N + (1-tau) N_E) - (1-tau) g(N_E), in nats.
double capacity_upper_bound(double tau, double mean_photons, double env_photons);

/// Coherent-state Holevo rate (a standard benchmark, not part of the bound
/// family above): g(tau N + (1-tau) N_E) - g((1-tau) N_E).
double holevo_lower_bound(double tau, double mean_photons, double env_photons);

/// Entanglement witness from amplifier output entropy and purity. The input
/// holds signal and idler halves; flags fire when the output beats the
/// product-input limits S >= ln(2 zeta - 1) and mu <= 1/(2 zeta - 1).
/// renyi_order > 0 additionally records S_p of the output; that variant is
/// conjectural and never drives the flags.
struct WitnessRecord {
  double zeta = 0.0;
  double output_entropy = 0.0;
  double entropy_threshold = 0.0;
  double output_purity = 0.0;
  double purity_threshold = 0.0;
  bool entropy_flag = false;
  bool purity_flag = false;
  double renyi_order = 0.0;
  double output_renyi_entropy = 0.0;
  bool renyi_flag = false;
  bool conjectural = false;
};

WitnessRecord entanglement_witness(const GaussianState& ab, double zeta,
                                   double renyi_order = 0.0);

enum class KappaMode { minimal, fixed };

/// Battery grid. kappa per cell is (p+1)/2 + kappa_offset in minimal mode or
/// the fixed kappa value otherwise. Trials are independent, seeded from
/// (seed, flat trial index), so results do not depend on thread count.
struct BatteryConfig {
  std::vector<EntropyFunctional> functionals = {EntropyFunctional::wehrl,
                                                EntropyFunctional::wigner_renyi};
  std::vector<int> modes = {1, 2, 3};
  std::vector<double> orders = {1.5, 2.0, 3.0};
  std::vector<double> taus = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  KappaMode kappa_mode = KappaMode::minimal;
  double kappa_offset = 0.0;
  double kappa_fixed = 1.0;
  long trials_per_cell = 1000;
  std::uint64_t seed = 1;
  double squeeze_max = 1.0;
  double thermal_rate = 1.0;
  MixConvention convention = MixConvention::eq5;
  int threads = 1;
  bool experimental_orders = false;
};

/// One summary row per battery cell.
struct BatterySummaryRow {
  std::string functional;
  int modes = 0;
  double p = 0.0;
  double kappa = 0.0;
  double tau = 0.0;
  long trials = 0;
  long failures = 0;
  double min_slack = 0.0;
  std::uint64_t min_slack_seed = 0;
};

struct BatteryResult {
  std::vector<EPICheckRecord> records;
  std::vector<BatterySummaryRow> summary;
  long failures = 0;
};

void validate_config(const BatteryConfig& config);

/// Random-state battery over the full grid of the config.
BatteryResult run_battery(const BatteryConfig& config);

/// Photon-number superadditivity battery over modes x taus; orders/kappas in
/// the config are ignored.
BatteryResult run_epni_battery(const BatteryConfig& config);

}  // namespace qepi
