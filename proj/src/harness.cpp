#include "qepi/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "qepi/errors.hpp"
#include "qepi/gfunction.hpp"
#include "qepi/io.hpp"
#include "qepi/rng.hpp"

namespace qepi {

namespace {

constexpr double kPassSlack = 1e-9;
constexpr double kReevalBand = 1e-6;

double k_factor(double p) {
  if (p <= 1.0 + 1e-12) return 1.0;  // continuous limit at p = 1
  return (1.0 - 1.0 / p) * std::pow(p * p / (p - 1.0), 1.0 / p);
}

// Extended-precision Cholesky log-determinant for the re-evaluation path.
long double log_det_ld(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<long double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i * n + j] = static_cast<long double>(m(i, j));
  long double log_det = 0.0L;
  for (int j = 0; j < n; ++j) {
    long double diag = a[j * n + j];
    for (int k = 0; k < j; ++k) diag -= a[j * n + k] * a[j * n + k];
    if (diag <= 0.0L)
      throw std::invalid_argument("log_det_ld: matrix is not positive definite");
    const long double root = sqrtl(diag);
    a[j * n + j] = root;
    log_det += 2.0L * logl(root);
    for (int i = j + 1; i < n; ++i) {
      long double v = a[i * n + j];
      for (int k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = v / root;
    }
  }
  return log_det;
}

long double entropy_power_ld(const GaussianState& state, bool husimi, double p) {
  const Eigen::MatrixXd sigma =
      husimi ? Eigen::MatrixXd(0.5 * (state.cov + Eigen::MatrixXd::Identity(
                                                      state.cov.rows(), state.cov.cols())))
             : Eigen::MatrixXd(0.5 * state.cov);
  const long double n = 2.0L * state.modes;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double h = 0.5L * (n * logl(two_pi) + log_det_ld(sigma)) +
                        0.5L * n * logl(static_cast<long double>(p)) /
                            (static_cast<long double>(p) - 1.0L);
  return expl(h / static_cast<long double>(state.modes));
}

double state_power(EntropyFunctional functional, const GaussianState& s, double p) {
  if (functional == EntropyFunctional::wehrl)
    return entropy_power(wehrl_renyi_entropy(s, p)).value;
  if (functional == EntropyFunctional::wigner_renyi)
    return entropy_power(wigner_renyi_entropy(s, p)).value;
  throw BadParams("epi_check: functional must be wehrl or wigner_renyi");
}

const char* functional_label(EntropyFunctional functional) {
  return functional == EntropyFunctional::wehrl ? "wehrl" : "wigner";
}

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double x_log_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

bool kappa_admissible(double p, double kappa) {
  return kappa >= 0.5 * (p + 1.0) - 1e-12;
}

void require_young_triple(double r, double s, double t) {
  if (!(r >= 1.0 - 1e-12) || !(s >= 1.0 - 1e-12) || !(t >= 1.0 - 1e-12))
    throw BadTriple("young triple: exponents must be >= 1");
  if (std::abs(1.0 / r + 1.0 / s - 1.0 / t - 1.0) > 1e-12)
    throw BadTriple("young triple: 1/r + 1/s - 1/t must equal 1");
}

EPICheckRecord epi_check(EntropyFunctional functional, const GaussianState& x,
                         const GaussianState& y, const InequalityParams& params) {
  if (x.modes != y.modes) throw ModeMismatch("epi_check: mode counts must match");
  if (!(params.tau > 0.0 && params.tau < 1.0))
    throw BadTau("epi_check: tau must lie in (0, 1)");
  if (!(params.p > 0.0) || params.p == 1.0)
    throw BadOrder("epi_check: order must satisfy p > 0, p != 1");
  if (params.p < 1.0 && !params.allow_experimental_order)
    throw BadOrder("epi_check: orders p < 1 require the experimental flag");
  if (!(params.kappa > 0.0)) throw BadParams("epi_check: kappa must be > 0");

  const GaussianState z = beam_splitter_mix(x, y, params.tau);
  const double vx = state_power(functional, x, params.p);
  const double vy = state_power(functional, y, params.p);
  const double vz = state_power(functional, z, params.p);

  EPICheckRecord rec;
  rec.functional = functional_label(functional);
  rec.modes = x.modes;
  rec.p = params.p;
  rec.kappa = params.kappa;
  rec.tau = params.tau;
  rec.lhs = std::pow(vz, params.kappa);
  rec.rhs = std::pow(params.tau, params.kappa) * std::pow(vx, params.kappa) +
            std::pow(1.0 - params.tau, params.kappa) * std::pow(vy, params.kappa);
  rec.slack = rec.lhs - rec.rhs;
  rec.kappa_admissible = kappa_admissible(params.p, params.kappa);

  const double scale = std::max(1.0, std::abs(rec.lhs));
  if (rec.slack < 0.0 && rec.slack >= -kReevalBand * scale) {
    // Borderline negatives are retried in extended precision before being
    // reported as violations.
    const bool husimi = functional == EntropyFunctional::wehrl;
    const long double k = static_cast<long double>(params.kappa);
    const long double tau_ld = static_cast<long double>(params.tau);
    const long double lhs =
        powl(entropy_power_ld(z, husimi, params.p), k);
    const long double rhs =
        powl(tau_ld, k) * powl(entropy_power_ld(x, husimi, params.p), k) +
        powl(1.0L - tau_ld, k) * powl(entropy_power_ld(y, husimi, params.p), k);
    rec.slack = static_cast<double>(lhs - rhs);
    rec.reevaluated = true;
  }
  rec.pass = rec.slack >= -kPassSlack * scale;
  rec.x_fingerprint = fingerprint(x);
  rec.y_fingerprint = fingerprint(y);
  return rec;
}

EPICheckRecord epni_check(const GaussianState& x, const GaussianState& y,
                          double tau) {
  if (x.modes != y.modes) throw ModeMismatch("epni_check: mode counts must match");
  if (!(tau > 0.0 && tau < 1.0))
    throw BadTau("epni_check: tau must lie in (0, 1)");
  const GaussianState z = beam_splitter_mix(x, y, tau);

  EPICheckRecord rec;
  rec.functional = "epni";
  rec.modes = x.modes;
  rec.p = 1.0;
  rec.kappa = 1.0;
  rec.tau = tau;
  rec.lhs = photon_number(z);
  rec.rhs = tau * photon_number(x) + (1.0 - tau) * photon_number(y);
  rec.slack = rec.lhs - rec.rhs;
  rec.kappa_admissible = true;
  rec.pass = rec.slack >= -kPassSlack * std::max(1.0, std::abs(rec.lhs));
  rec.x_fingerprint = fingerprint(x);
  rec.y_fingerprint = fingerprint(y);
  return rec;
}

double young_constant(double r, double s, double t) {
  require_young_triple(r, s, t);
  return k_factor(r) * k_factor(s) / k_factor(t);
}

YoungCheckRecord young_check(const PhaseSpaceGaussian& gx,
                             const PhaseSpaceGaussian& gy, double r, double s,
                             double t, double tau) {
  if (gx.dims != gy.dims)
    throw DimensionMismatch("young_check: density dimensions must match");
  require_young_triple(r, s, t);
  if (!(tau > 0.0 && tau < 1.0)) throw BadTau("young_check: tau must lie in (0, 1)");

  YoungCheckRecord rec;
  rec.dims = gx.dims;
  rec.r = r;
  rec.s = s;
  rec.t = t;
  rec.tau = tau;
  rec.constant_k = young_constant(r, s, t);
  const double dim_count = 0.5 * gx.dims;  // complex dimensions D = n/2

  rec.lhs_plain = lp_norm(convolve_plain(gx, gy), t);
  rec.lhs_scaled = lp_norm(convolve_densities(gx, gy, tau), t);
  rec.rhs_base = lp_norm(gx, r) * lp_norm(gy, s);
  rec.rhs_half_exponent = std::pow(rec.constant_k, 0.5 * dim_count) * rec.rhs_base;
  rec.rhs_full_exponent = std::pow(rec.constant_k, dim_count) * rec.rhs_base;

  auto holds = [](double lhs, double rhs) {
    return rhs - lhs >= -kPassSlack * std::max(1.0, std::abs(rhs));
  };
  rec.plain_holds_half = holds(rec.lhs_plain, rec.rhs_half_exponent);
  rec.plain_holds_full = holds(rec.lhs_plain, rec.rhs_full_exponent);
  rec.scaled_holds_half = holds(rec.lhs_scaled, rec.rhs_half_exponent);
  rec.scaled_holds_full = holds(rec.lhs_scaled, rec.rhs_full_exponent);

  // Entropy-power recasts. power(g, p) = exp(S_p / D); a zero exponent skips
  // the evaluation entirely so p = 1 never reaches the Renyi formula.
  auto power_factor = [&](const PhaseSpaceGaussian& g, double p, double expo,
                          double weight) {
    if (expo == 0.0) return 1.0;
    const double v =
        weight * std::exp(classical_renyi_entropy(g, p).value / dim_count);
    return std::pow(v, expo);
  };
  const PhaseSpaceGaussian scaled = convolve_densities(gx, gy, tau);
  rec.power_lhs = power_factor(scaled, t, 1.0 - 1.0 / t, 1.0);
  rec.power_rhs_mixed = (1.0 / rec.constant_k) *
                        power_factor(gx, r, 1.0 - 1.0 / r, 1.0) *
                        power_factor(gy, s, 1.0 - 1.0 / s, 1.0);
  rec.power_rhs_mixed_weighted = (1.0 / rec.constant_k) *
                                 power_factor(gx, r, 1.0 - 1.0 / r, tau) *
                                 power_factor(gy, s, 1.0 - 1.0 / s, 1.0 - tau);
  rec.power_rhs_merged = (1.0 / rec.constant_k) *
                         power_factor(gx, t, 1.0 - 1.0 / r, 1.0) *
                         power_factor(gy, t, 1.0 - 1.0 / s, 1.0);
  auto power_holds = [](double lhs, double rhs) {
    return lhs - rhs >= -kPassSlack * std::max(1.0, std::abs(lhs));
  };
  rec.power_mixed_holds = power_holds(rec.power_lhs, rec.power_rhs_mixed);
  rec.power_mixed_weighted_holds =
      power_holds(rec.power_lhs, rec.power_rhs_mixed_weighted);
  rec.power_merged_holds = power_holds(rec.power_lhs, rec.power_rhs_merged);
  return rec;
}

HomogeneitySearchResult lemma1_search(double t, double a, double b) {
  if (!(t > 1.0)) throw BadParams("lemma1_search: t must exceed 1");
  if (!(a > 0.0) || !(b > 0.0))
    throw BadParams("lemma1_search: a and b must be positive");
  const double threshold = 1.0 - 1.0 / t;
  if (std::abs(a + b - threshold) > 1e-12)
    throw ConstraintViolated("lemma1_search: a + b must equal 1 - 1/t");

  const double kappa = 0.5 * (t + 1.0);
  const double log_a = std::log(a);
  const double log_b = std::log(b);
  // Family parameter u = 1/r in [1/t, 1]; then 1/s = 1 + 1/t - u and the two
  // exponents are a convex split lambda, 1 - lambda with lambda = t(1-u)/(t-1).
  auto log_lhs = [&](double u) {
    const double r = 1.0 / u;
    const double s = 1.0 / (1.0 + 1.0 / t - u);
    const double log_k = std::log(k_factor(r) * k_factor(s) / k_factor(t));
    const double lambda = t * (1.0 - u) / (t - 1.0);
    return -(kappa * t / (t - 1.0)) * log_k + lambda * log_a +
           (1.0 - lambda) * log_b;
  };

  const double lo = 1.0 / t, hi = 1.0;
  const int grid = 4096;
  double best_u = lo;
  double best_val = log_lhs(lo);
  for (int i = 1; i <= grid; ++i) {
    const double u = lo + (hi - lo) * i / grid;
    const double v = log_lhs(u);
    if (v > best_val) {
      best_val = v;
      best_u = u;
    }
  }
  const double step = (hi - lo) / grid;
  const double bracket_lo = std::max(lo, best_u - step);
  const double bracket_hi = std::min(hi, best_u + step);
  const double u_star = golden_min([&](double u) { return -log_lhs(u); },
                                   bracket_lo, bracket_hi, 1e-10);
  const double refined = log_lhs(u_star);
  if (refined > best_val) {
    best_val = refined;
    best_u = u_star;
  }

  HomogeneitySearchResult res;
  res.r = 1.0 / best_u;
  res.s = 1.0 / (1.0 + 1.0 / t - best_u);
  res.lhs_max = std::exp(best_val);
  res.threshold = threshold;
  res.pass = res.lhs_max >= threshold * (1.0 - kPassSlack);
  return res;
}

CalculusScanResult lemma2_minimize(double c, double d) {
  if (!(c > 0.0 && c < 1.0))
    throw BadDomain("lemma2_minimize: c must lie in (0, 1)");
  if (d < 2.0 / c - 1.0 - 1e-12)
    throw BadDomain("lemma2_minimize: d must be >= 2/c - 1");

  auto log_f = [&](double x) {
    x = std::clamp(x, 0.0, c);
    const double y = c - x;
    return d * ((1.0 - x) * std::log1p(-x) + (1.0 - y) * std::log1p(-y)) -
           x_log_x(x) - x_log_x(y);
  };

  const int grid = 10'000;
  int best_i = 0;
  double best_val = log_f(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double v = log_f(c * i / grid);
    if (v < best_val) {
      best_val = v;
      best_i = i;
    }
  }
  const double lo = c * std::max(0, best_i - 1) / grid;
  const double hi = c * std::min(grid, best_i + 1) / grid;
  double x_star = golden_min(log_f, lo, hi, 1e-10);
  if (log_f(c * best_i / grid) < log_f(x_star)) x_star = c * best_i / grid;
  // Snap to the exact boundary/center when the refinement lands next to it.
  for (double candidate : {0.0, 0.5 * c, c})
    if (std::abs(x_star - candidate) <= 1e-7 && log_f(candidate) <= log_f(x_star))
      x_star = candidate;

  CalculusScanResult res;
  res.x_min = x_star;
  res.f_min = std::exp(log_f(x_star));
  if (std::abs(x_star) <= 1e-6)
    res.location = MinLocation::left_end;
  else if (std::abs(x_star - c) <= 1e-6)
    res.location = MinLocation::right_end;
  else if (std::abs(x_star - 0.5 * c) <= 1e-6)
    res.location = MinLocation::center;
  else
    res.location = MinLocation::other;
  return res;
}

double capacity_upper_bound(double tau, double mean_photons, double env_photons) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw BadTau("capacity_upper_bound: tau must lie in (0, 1]");
  if (mean_photons < 0.0 || env_photons < 0.0)
    throw NegativeMeanPhotons("capacity_upper_bound: photon numbers must be >= 0");
  return g_function(tau * mean_photons + (1.0 - tau) * env_photons) -
         (1.0 - tau) * g_function(env_photons);
}

double holevo_lower_bound(double tau, double mean_photons, double env_photons) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw BadTau("holevo_lower_bound: tau must lie in (0, 1]");
  if (mean_photons < 0.0 || env_photons < 0.0)
    throw NegativeMeanPhotons("holevo_lower_bound: photon numbers must be >= 0");
  return g_function(tau * mean_photons + (1.0 - tau) * env_photons) -
         g_function((1.0 - tau) * env_photons);
}

WitnessRecord entanglement_witness(const GaussianState& ab, double zeta,
                                   double renyi_order) {
  if (!(zeta > 1.0)) throw BadGain("entanglement_witness: gain zeta must exceed 1");
  const GaussianState out = amplifier_joint(ab, zeta);

  WitnessRecord rec;
  rec.zeta = zeta;
  rec.output_entropy = von_neumann_entropy(out);
  rec.entropy_threshold = std::log(2.0 * zeta - 1.0);
  rec.output_purity = purity(out);
  rec.purity_threshold = 1.0 / (2.0 * zeta - 1.0);
  rec.entropy_flag = rec.output_entropy < rec.entropy_threshold;
  rec.purity_flag = rec.output_purity > rec.purity_threshold;
  if (renyi_order > 0.0) {
    rec.renyi_order = renyi_order;
    rec.output_renyi_entropy = renyi_trace_entropy(out, renyi_order);
    rec.renyi_flag = rec.output_renyi_entropy < rec.entropy_threshold;
    rec.conjectural = true;
  }
  return rec;
}

void validate_config(const BatteryConfig& config) {
  if (config.functionals.empty() || config.modes.empty() ||
      config.orders.empty() || config.taus.empty())
    throw ConfigInvalid("battery: every grid axis needs at least one value");
  for (EntropyFunctional f : config.functionals)
    if (f != EntropyFunctional::wehrl && f != EntropyFunctional::wigner_renyi)
      throw ConfigInvalid("battery: functionals must be wehrl or wigner_renyi");
  for (int d : config.modes)
    if (d < 1) throw ConfigInvalid("battery: mode counts must be >= 1");
  for (double p : config.orders) {
    if (!(p > 0.0) || p == 1.0)
      throw ConfigInvalid("battery: orders must satisfy p > 0, p != 1");
    if (p < 1.0 && !config.experimental_orders)
      throw ConfigInvalid("battery: orders p < 1 require the experimental flag");
  }
  for (double tau : config.taus)
    if (!(tau > 0.0 && tau < 1.0))
      throw ConfigInvalid("battery: taus must lie in (0, 1)");
  if (config.kappa_mode == KappaMode::minimal && config.kappa_offset < 0.0)
    throw ConfigInvalid("battery: kappa_offset must be >= 0");
  if (config.kappa_mode == KappaMode::fixed && !(config.kappa_fixed > 0.0))
    throw ConfigInvalid("battery: fixed kappa must be > 0");
  if (config.trials_per_cell < 0)
    throw ConfigInvalid("battery: trials_per_cell must be >= 0");
  if (config.threads < 1) throw ConfigInvalid("battery: threads must be >= 1");
  if (config.squeeze_max < 0.0)
    throw ConfigInvalid("battery: squeeze_max must be >= 0");
  if (!(config.thermal_rate > 0.0))
    throw ConfigInvalid("battery: thermal_rate must be > 0");
}

namespace {

struct Cell {
  EntropyFunctional functional;
  int modes;
  double p;
  double kappa;
  double tau;
};

std::vector<Cell> enumerate_cells(const BatteryConfig& config, bool epni) {
  std::vector<Cell> cells;
  if (epni) {
    for (int d : config.modes)
      for (double tau : config.taus)
        cells.push_back({EntropyFunctional::von_neumann, d, 1.0, 1.0, tau});
    return cells;
  }
  for (EntropyFunctional f : config.functionals)
    for (int d : config.modes)
      for (double p : config.orders) {
        const double kappa = config.kappa_mode == KappaMode::minimal
                                 ? 0.5 * (p + 1.0) + config.kappa_offset
                                 : config.kappa_fixed;
        for (double tau : config.taus) cells.push_back({f, d, p, kappa, tau});
      }
  return cells;
}

BatteryResult run_cells(const BatteryConfig& config, const std::vector<Cell>& cells,
                        bool epni) {
  const long trials = config.trials_per_cell;
  const long total = static_cast<long>(cells.size()) * trials;
  BatteryResult result;
  result.records.resize(total);

  auto run_trial = [&](long flat) {
    const Cell& cell = cells[flat / trials];
    const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(flat));
    const GaussianState x = random_state(cell.modes, derive_seed(trial_seed, 1),
                                         config.squeeze_max, config.thermal_rate);
    const GaussianState y = random_state(cell.modes, derive_seed(trial_seed, 2),
                                         config.squeeze_max, config.thermal_rate);
    const double tau_eff =
        config.convention == MixConvention::eq9 ? 1.0 - cell.tau : cell.tau;
    EPICheckRecord rec;
    if (epni) {
      rec = epni_check(x, y, tau_eff);
    } else {
      InequalityParams params;
      params.p = cell.p;
      params.kappa = cell.kappa;
      params.tau = tau_eff;
      params.allow_experimental_order = config.experimental_orders;
      rec = epi_check(cell.functional, x, y, params);
    }
    rec.seed = trial_seed;
    result.records[flat] = rec;
  };

  if (config.threads <= 1 || total < 2) {
    for (long i = 0; i < total; ++i) run_trial(i);
  } else {
    std::atomic<long> next(0);
    auto worker = [&] {
      for (long i = next.fetch_add(1); i < total; i = next.fetch_add(1))
        run_trial(i);
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min<long>(config.threads, total);
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    BatterySummaryRow row;
    row.functional = epni ? "epni"
                          : functional_label(cells[ci].functional);
    row.modes = cells[ci].modes;
    row.p = cells[ci].p;
    row.kappa = cells[ci].kappa;
    row.tau = config.convention == MixConvention::eq9 ? 1.0 - cells[ci].tau
                                                      : cells[ci].tau;
    row.trials = trials;
    row.failures = 0;
    row.min_slack = std::numeric_limits<double>::infinity();
    row.min_slack_seed = 0;
    for (long k = 0; k < trials; ++k) {
      const EPICheckRecord& rec = result.records[ci * trials + k];
      if (!rec.pass) ++row.failures;
      if (rec.slack < row.min_slack) {
        row.min_slack = rec.slack;
        row.min_slack_seed = rec.seed;
      }
    }
    if (trials == 0) row.min_slack = 0.0;
    result.failures += row.failures;
    result.summary.push_back(row);
  }
  return result;
}

}  // namespace

BatteryResult run_battery(const BatteryConfig& config) {
  validate_config(config);
  return run_cells(config, enumerate_cells(config, false), false);
}

BatteryResult run_epni_battery(const BatteryConfig& config) {
  BatteryConfig probe = config;
  probe.orders = {2.0};  // unused by the photon-number check
  validate_config(probe);
  return run_cells(config, enumerate_cells(config, true), true);
}

}  // namespace qepi
