#pragma once

#include <string>
#include <vector>

#include "qepi/gaussian_state.hpp"
#include "qepi/harness.hpp"

namespace qepi {

/// Formats a double with 17 significant digits, enough to round-trip exactly.
std::string fp17(double v);

/// Canonical JSON form {"modes": D, "mean": [...], "cov": [[...], ...]} with
/// fp17 numbers and no whitespace. Stable across platforms; used both for
/// files and for fingerprinting.
std::string state_to_json(const GaussianState& state);

/// Parses the canonical schema (extra keys ignored) and validates the state.
/// Structural problems throw IoError; a well-formed file describing an
/// invalid state propagates the validation error instead.
GaussianState state_from_json(const std::string& text);

/// Reads and parses a state file. Unreadable files throw IoError.
GaussianState read_state(const std::string& path);

/// Writes text to a file, throwing IoError on failure.
void write_text(const std::string& path, const std::string& text);

/// 16 lowercase hex digits: FNV-1a 64 over the canonical JSON of the state.
std::string fingerprint(const GaussianState& state);

/// One JSON-lines record, fixed key order, fp17 numbers, no trailing newline.
std::string record_to_jsonl(const EPICheckRecord& rec);

/// Battery summary CSV, header
/// functional,D,p,kappa,tau,trials,failures,min_slack,min_slack_seed.
std::string summary_to_csv(const std::vector<BatterySummaryRow>& rows);

/// Unit-tagged reports. bits = true divides entropic quantities by ln 2.
std::string young_record_to_json(const YoungCheckRecord& rec);
std::string witness_record_to_json(const WitnessRecord& rec, bool bits);
std::string capacity_csv_header(bool bits);
std::string capacity_csv_row(double tau, double mean_photons, double env_photons,
                             bool bits);

}  // namespace qepi
