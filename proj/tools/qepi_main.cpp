// qepi: command-line front end for the phase-space Gaussian entropy toolkit.
// Exit codes: 0 success / all checks passed, 2 validation or inequality
// failure, 1 operational error (unreadable or malformed input, bad usage).

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qepi/channels.hpp"
#include "qepi/entropy.hpp"
#include "qepi/errors.hpp"
#include "qepi/gaussian_state.hpp"
#include "qepi/gfunction.hpp"
#include "qepi/harness.hpp"
#include "qepi/io.hpp"
#include "qepi/phase_space.hpp"
#include "qepi/rng.hpp"

namespace {

using namespace qepi;

double unit_scale(const std::string& units) {
  return units == "bits" ? 1.0 / std::log(2.0) : 1.0;
}

MixConvention parse_convention(const std::string& name) {
  return name == "eq9" ? MixConvention::eq9 : MixConvention::eq5;
}

const char* location_name(MinLocation loc) {
  switch (loc) {
    case MinLocation::left_end: return "left_end";
    case MinLocation::right_end: return "right_end";
    case MinLocation::center: return "center";
    default: return "other";
  }
}

void emit_battery(const BatteryResult& result, const std::string& out_prefix) {
  const std::string csv = summary_to_csv(result.summary);
  std::cout << csv;
  if (!out_prefix.empty()) {
    std::string jsonl;
    for (const EPICheckRecord& rec : result.records)
      jsonl += record_to_jsonl(rec) + "\n";
    write_text(out_prefix + ".jsonl", jsonl);
    write_text(out_prefix + ".csv", csv);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-space entropy toolkit for bosonic Gaussian states"};
  app.require_subcommand(1);
  int rc = 0;

  // validate
  std::string validate_path;
  auto* validate = app.add_subcommand(
      "validate", "Parse a state file and check physicality");
  validate->add_option("path", validate_path, "state JSON file")->required();
  validate->callback([&] {
    const GaussianState s = read_state(validate_path);
    std::string nus;
    for (double nu : symplectic_eigenvalues(s).values) {
      if (!nus.empty()) nus += ',';
      nus += fp17(nu);
    }
    std::cout << "{\"valid\":true,\"modes\":" << s.modes
              << ",\"symplectic_eigenvalues\":[" << nus
              << "],\"purity\":" << fp17(purity(s)) << "}\n";
  });

  // entropy
  std::string entropy_path, entropy_functional = "von-neumann",
                            entropy_units = "nats";
  double entropy_p = 2.0;
  bool entropy_experimental = false;
  auto* entropy =
      app.add_subcommand("entropy", "Evaluate an entropy functional of a state");
  entropy->add_option("path", entropy_path, "state JSON file")->required();
  entropy->add_option("--functional", entropy_functional, "functional to evaluate")
      ->check(CLI::IsMember({"wehrl", "wigner", "renyi", "von-neumann"}))
      ->capture_default_str();
  entropy->add_option("--p", entropy_p, "Renyi order")->capture_default_str();
  entropy->add_option("--units", entropy_units, "output units")
      ->check(CLI::IsMember({"nats", "bits"}))
      ->capture_default_str();
  entropy->add_flag("--experimental-p", entropy_experimental,
                    "admit orders p <= 1");
  entropy->callback([&] {
    const GaussianState s = read_state(entropy_path);
    const double scale = unit_scale(entropy_units);
    double value = 0.0, power = 0.0, order = entropy_p;
    if (entropy_functional != "von-neumann" && entropy_p <= 1.0 &&
        !entropy_experimental)
      throw BadOrder("orders p <= 1 require --experimental-p");
    if (entropy_functional == "von-neumann" ||
        (entropy_p == 1.0 && entropy_functional == "renyi")) {
      order = 1.0;
      value = von_neumann_entropy(s);
      power = std::exp(value / s.modes);
    } else if (entropy_p == 1.0) {
      // p = 1 under the experimental flag: the Shannon limit of the family.
      const PhaseSpaceGaussian g =
          entropy_functional == "wehrl" ? husimi_of(s) : wigner_of(s);
      value = classical_shannon_entropy(g);
      power = std::exp(value / s.modes);
    } else if (entropy_functional == "wehrl") {
      const EntropyValue e = wehrl_renyi_entropy(s, entropy_p);
      value = e.value;
      power = entropy_power(e).value;
    } else if (entropy_functional == "wigner") {
      const EntropyValue e = wigner_renyi_entropy(s, entropy_p);
      value = e.value;
      power = entropy_power(e).value;
    } else {
      value = renyi_trace_entropy(s, entropy_p);
      power = std::exp(value / s.modes);
    }
    std::cout << "{\"functional\":\"" << entropy_functional
              << "\",\"p\":" << fp17(order) << ",\"units\":\"" << entropy_units
              << "\",\"value\":" << fp17(value * scale)
              << ",\"entropy_power\":" << fp17(power) << "}\n";
  });

  // convolve
  std::string conv_x, conv_y, conv_convention = "eq5", conv_out;
  double conv_tau = 0.5;
  auto* convolve = app.add_subcommand(
      "convolve", "Beam-splitter convolution of two state files");
  convolve->add_option("x", conv_x, "first state JSON file")->required();
  convolve->add_option("y", conv_y, "second state JSON file")->required();
  convolve->add_option("--tau", conv_tau, "transmissivity in (0,1)")
      ->capture_default_str();
  convolve->add_option("--convention", conv_convention,
                       "weight reading: eq5 puts tau on x, eq9 swaps")
      ->check(CLI::IsMember({"eq5", "eq9"}))
      ->capture_default_str();
  convolve->add_option("--out", conv_out, "write result to file");
  convolve->callback([&] {
    const GaussianState x = read_state(conv_x);
    const GaussianState y = read_state(conv_y);
    const double tau_eff = parse_convention(conv_convention) == MixConvention::eq9
                               ? 1.0 - conv_tau
                               : conv_tau;
    const GaussianState z = beam_splitter_mix(x, y, tau_eff);
    const std::string text = state_to_json(z) + "\n";
    if (conv_out.empty())
      std::cout << text;
    else
      write_text(conv_out, text);
  });

  // epi-sweep
  std::string sweep_functional = "both", sweep_kappa_mode = "minimal",
              sweep_convention = "eq5", sweep_out;
  BatteryConfig sweep_cfg;
  auto* sweep = app.add_subcommand(
      "epi-sweep", "Random-state entropy-power inequality battery");
  sweep->add_option("--functional", sweep_functional, "wehrl, wigner, or both")
      ->check(CLI::IsMember({"wehrl", "wigner", "both"}))
      ->capture_default_str();
  sweep->add_option("--modes", sweep_cfg.modes, "mode counts")
      ->capture_default_str();
  sweep->add_option("--p", sweep_cfg.orders, "Renyi orders")
      ->capture_default_str();
  sweep->add_option("--tau", sweep_cfg.taus, "transmissivities")
      ->capture_default_str();
  sweep->add_option("--kappa-mode", sweep_kappa_mode,
                    "minimal: kappa = (p+1)/2 + offset; fixed: --kappa value")
      ->check(CLI::IsMember({"minimal", "fixed"}))
      ->capture_default_str();
  sweep->add_option("--kappa-offset", sweep_cfg.kappa_offset,
                    "offset above the minimal kappa")
      ->capture_default_str();
  sweep->add_option("--kappa", sweep_cfg.kappa_fixed, "fixed kappa value")
      ->capture_default_str();
  sweep->add_option("--trials", sweep_cfg.trials_per_cell, "trials per grid cell")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_cfg.seed, "master seed")
      ->capture_default_str();
  sweep->add_option("--threads", sweep_cfg.threads, "worker threads")
      ->capture_default_str();
  sweep->add_option("--squeeze-max", sweep_cfg.squeeze_max,
                    "bound on random squeeze factors")
      ->capture_default_str();
  sweep->add_option("--thermal-rate", sweep_cfg.thermal_rate,
                    "rate of the random thermal excess")
      ->capture_default_str();
  sweep->add_option("--convention", sweep_convention, "eq5 or eq9 weights")
      ->check(CLI::IsMember({"eq5", "eq9"}))
      ->capture_default_str();
  sweep->add_flag("--experimental-p", sweep_cfg.experimental_orders,
                  "admit orders p <= 1");
  sweep->add_option("--out", sweep_out,
                    "prefix for <prefix>.jsonl and <prefix>.csv");
  sweep->callback([&] {
    if (sweep_functional == "wehrl")
      sweep_cfg.functionals = {EntropyFunctional::wehrl};
    else if (sweep_functional == "wigner")
      sweep_cfg.functionals = {EntropyFunctional::wigner_renyi};
    else
      sweep_cfg.functionals = {EntropyFunctional::wehrl,
                               EntropyFunctional::wigner_renyi};
    sweep_cfg.kappa_mode = sweep_kappa_mode == "fixed" ? KappaMode::fixed
                                                       : KappaMode::minimal;
    sweep_cfg.convention = parse_convention(sweep_convention);
    const BatteryResult result = run_battery(sweep_cfg);
    emit_battery(result, sweep_out);
    if (result.failures > 0) rc = 2;
  });

  // epni-check
  std::string epni_x, epni_y, epni_convention = "eq5", epni_out;
  BatteryConfig epni_cfg;
  double epni_tau = 0.5;
  auto* epni = app.add_subcommand(
      "epni-check", "Photon-number superadditivity: two files or a battery");
  epni->add_option("x", epni_x, "first state JSON file (single-pair mode)");
  epni->add_option("y", epni_y, "second state JSON file (single-pair mode)");
  epni->add_option("--tau", epni_tau, "transmissivity for single-pair mode")
      ->capture_default_str();
  epni->add_option("--modes", epni_cfg.modes, "battery mode counts")
      ->capture_default_str();
  epni->add_option("--taus", epni_cfg.taus, "battery transmissivities")
      ->capture_default_str();
  epni->add_option("--trials", epni_cfg.trials_per_cell, "trials per grid cell")
      ->capture_default_str();
  epni->add_option("--seed", epni_cfg.seed, "master seed")->capture_default_str();
  epni->add_option("--threads", epni_cfg.threads, "worker threads")
      ->capture_default_str();
  epni->add_option("--squeeze-max", epni_cfg.squeeze_max,
                   "bound on random squeeze factors")
      ->capture_default_str();
  epni->add_option("--thermal-rate", epni_cfg.thermal_rate,
                   "rate of the random thermal excess")
      ->capture_default_str();
  epni->add_option("--convention", epni_convention, "eq5 or eq9 weights")
      ->check(CLI::IsMember({"eq5", "eq9"}))
      ->capture_default_str();
  epni->add_option("--out", epni_out,
                   "prefix for <prefix>.jsonl and <prefix>.csv");
  epni->callback([&] {
    if (epni_x.empty() != epni_y.empty())
      throw ConfigInvalid("epni-check needs both state files or neither");
    if (!epni_x.empty()) {
      const EPICheckRecord rec =
          epni_check(read_state(epni_x), read_state(epni_y), epni_tau);
      std::cout << record_to_jsonl(rec) << "\n";
      if (!rec.pass) rc = 2;
      return;
    }
    epni_cfg.convention = parse_convention(epni_convention);
    const BatteryResult result = run_epni_battery(epni_cfg);
    emit_battery(result, epni_out);
    if (result.failures > 0) rc = 2;
  });

  // young-check
  double young_r = 0.0, young_s = 0.0, young_t = 0.0, young_tau = 0.5;
  int young_modes = 1;
  long young_trials = 1;
  std::uint64_t young_seed = 7;
  std::string young_exponent = "full";
  auto* young = app.add_subcommand(
      "young-check", "Sharp convolution-norm inequality on random Gaussians");
  young->add_option("--r", young_r, "first exponent")->required();
  young->add_option("--s", young_s, "second exponent")->required();
  young->add_option("--t", young_t, "target exponent")->required();
  young->add_option("--tau", young_tau, "scaled-convolution weight")
      ->capture_default_str();
  young->add_option("--modes", young_modes, "modes per random state")
      ->capture_default_str();
  young->add_option("--trials", young_trials, "random pairs to test")
      ->capture_default_str();
  young->add_option("--seed", young_seed, "master seed")->capture_default_str();
  young->add_option("--young-exponent", young_exponent,
                    "which constant power gates the exit code")
      ->check(CLI::IsMember({"half", "full"}))
      ->capture_default_str();
  young->callback([&] {
    bool violated = false;
    for (long i = 0; i < young_trials; ++i) {
      const std::uint64_t trial_seed = derive_seed(young_seed, i);
      const GaussianState x = random_state(young_modes, derive_seed(trial_seed, 1));
      const GaussianState y = random_state(young_modes, derive_seed(trial_seed, 2));
      const YoungCheckRecord rec = young_check(wigner_of(x), wigner_of(y),
                                               young_r, young_s, young_t,
                                               young_tau);
      std::cout << young_record_to_json(rec) << "\n";
      const bool holds =
          young_exponent == "half" ? rec.plain_holds_half : rec.plain_holds_full;
      if (!holds) violated = true;
    }
    if (violated) rc = 2;
  });

  // lemma1
  double l1_t = 2.0, l1_a = -1.0, l1_b = -1.0;
  auto* lemma1 = app.add_subcommand(
      "lemma1", "Maximize the homogeneous constant-power expression");
  lemma1->add_option("--t", l1_t, "exponent t > 1")->capture_default_str();
  lemma1->add_option("--a", l1_a, "first weight (default: (1-1/t)/2)");
  lemma1->add_option("--b", l1_b, "second weight (default: (1-1/t)/2)");
  lemma1->callback([&] {
    if (l1_a < 0.0 && l1_b < 0.0) l1_a = l1_b = 0.5 * (1.0 - 1.0 / l1_t);
    const HomogeneitySearchResult res = lemma1_search(l1_t, l1_a, l1_b);
    std::cout << "{\"t\":" << fp17(l1_t) << ",\"a\":" << fp17(l1_a)
              << ",\"b\":" << fp17(l1_b) << ",\"r\":" << fp17(res.r)
              << ",\"s\":" << fp17(res.s) << ",\"lhs_max\":" << fp17(res.lhs_max)
              << ",\"threshold\":" << fp17(res.threshold) << ",\"pass\":"
              << (res.pass ? "true" : "false") << "}\n";
    if (!res.pass) rc = 2;
  });

  // lemma2
  double l2_c = 0.5, l2_d = -1.0;
  auto* lemma2 = app.add_subcommand(
      "lemma2", "Locate the minimum of the two-sided binary-entropy product");
  lemma2->add_option("--c", l2_c, "split total in (0,1)")->capture_default_str();
  lemma2->add_option("--d", l2_d, "power d >= 2/c - 1 (default: the boundary)");
  lemma2->callback([&] {
    if (l2_d < 0.0) l2_d = 2.0 / l2_c - 1.0;
    const CalculusScanResult res = lemma2_minimize(l2_c, l2_d);
    std::cout << "{\"c\":" << fp17(l2_c) << ",\"d\":" << fp17(l2_d)
              << ",\"x_min\":" << fp17(res.x_min)
              << ",\"f_min\":" << fp17(res.f_min) << ",\"location\":\""
              << location_name(res.location) << "\"}\n";
    if (res.location == MinLocation::other) rc = 2;
  });

  // capacity
  double cap_tau = 0.5, cap_n = 1.0, cap_ne = 0.0;
  bool cap_grid = false;
  std::string cap_units = "nats";
  auto* capacity = app.add_subcommand(
      "capacity", "Thermal-noise channel capacity bounds (CSV)");
  capacity->add_option("--tau", cap_tau, "transmissivity in (0,1]")
      ->capture_default_str();
  capacity->add_option("--n", cap_n, "input mean photon number")
      ->capture_default_str();
  capacity->add_option("--ne", cap_ne, "environment mean photon number")
      ->capture_default_str();
  capacity->add_flag("--grid", cap_grid, "emit a tau x N x N_E grid instead");
  capacity->add_option("--units", cap_units, "output units")
      ->check(CLI::IsMember({"nats", "bits"}))
      ->capture_default_str();
  capacity->callback([&] {
    const bool bits = cap_units == "bits";
    std::cout << capacity_csv_header(bits) << "\n";
    bool crossed = false;
    auto emit = [&](double tau, double n, double ne) {
      std::cout << capacity_csv_row(tau, n, ne, bits) << "\n";
      if (holevo_lower_bound(tau, n, ne) >
          capacity_upper_bound(tau, n, ne) + 1e-12)
        crossed = true;
    };
    if (cap_grid) {
      for (int i = 1; i <= 10; ++i)
        for (int j = 0; j < 10; ++j)
          for (int k = 0; k < 10; ++k) emit(0.1 * i, 1.0 * j, 0.25 * k);
    } else {
      emit(cap_tau, cap_n, cap_ne);
    }
    if (crossed) rc = 2;
  });

  // witness
  std::string wit_path, wit_units = "nats";
  double wit_zeta = 2.0, wit_tmsv = -1.0, wit_renyi = 0.0;
  auto* witness = app.add_subcommand(
      "witness", "Amplifier-output entanglement witness for a two-part state");
  witness->add_option("path", wit_path, "signal+idler state JSON file");
  witness->add_option("--zeta", wit_zeta, "amplifier gain > 1")
      ->capture_default_str();
  witness->add_option("--tmsv", wit_tmsv,
                      "use a two-mode squeezed vacuum with this parameter");
  witness->add_option("--renyi-p", wit_renyi,
                      "also record the order-p output entropy (conjectural)");
  witness->add_option("--units", wit_units, "output units")
      ->check(CLI::IsMember({"nats", "bits"}))
      ->capture_default_str();
  witness->callback([&] {
    if (wit_path.empty() == (wit_tmsv < 0.0))
      throw ConfigInvalid("witness needs exactly one of: a state file, --tmsv");
    const GaussianState ab =
        wit_path.empty() ? two_mode_squeezed_vacuum(wit_tmsv) : read_state(wit_path);
    const WitnessRecord rec = entanglement_witness(ab, wit_zeta, wit_renyi);
    std::cout << witness_record_to_json(rec, wit_units == "bits") << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
