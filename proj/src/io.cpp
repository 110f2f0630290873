#include "qepi/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qepi/errors.hpp"

namespace qepi {

namespace {

using nlohmann::json;

const char* boolean(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string fp17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string state_to_json(const GaussianState& state) {
  std::string out = "{\"modes\":" + std::to_string(state.modes) + ",\"mean\":[";
  for (Eigen::Index i = 0; i < state.mean.size(); ++i) {
    if (i > 0) out += ',';
    out += fp17(state.mean(i));
  }
  out += "],\"cov\":[";
  for (Eigen::Index i = 0; i < state.cov.rows(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < state.cov.cols(); ++j) {
      if (j > 0) out += ',';
      out += fp17(state.cov(i, j));
    }
    out += ']';
  }
  out += "]}";
  return out;
}

GaussianState state_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("state JSON: parse failed: ") + e.what());
  }
  if (!j.is_object()) throw IoError("state JSON: top level must be an object");
  for (const char* key : {"modes", "mean", "cov"})
    if (!j.contains(key))
      throw IoError(std::string("state JSON: missing key \"") + key + "\"");
  if (!j["modes"].is_number_integer())
    throw IoError("state JSON: \"modes\" must be an integer");
  const auto& jm = j["mean"];
  if (!jm.is_array()) throw IoError("state JSON: \"mean\" must be an array");
  Eigen::VectorXd mean(static_cast<Eigen::Index>(jm.size()));
  for (std::size_t i = 0; i < jm.size(); ++i) {
    if (!jm[i].is_number())
      throw IoError("state JSON: \"mean\" entries must be numbers");
    mean(static_cast<Eigen::Index>(i)) = jm[i].get<double>();
  }
  const auto& jc = j["cov"];
  if (!jc.is_array() || jc.empty())
    throw IoError("state JSON: \"cov\" must be a non-empty array of rows");
  const std::size_t cols = jc[0].is_array() ? jc[0].size() : 0;
  Eigen::MatrixXd cov(static_cast<Eigen::Index>(jc.size()),
                      static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < jc.size(); ++i) {
    if (!jc[i].is_array() || jc[i].size() != cols)
      throw IoError("state JSON: \"cov\" rows must be equal-length arrays");
    for (std::size_t k = 0; k < cols; ++k) {
      if (!jc[i][k].is_number())
        throw IoError("state JSON: \"cov\" entries must be numbers");
      cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          jc[i][k].get<double>();
    }
  }
  const int modes = j["modes"].get<int>();
  if (modes < 1) throw DimensionMismatch("state JSON: modes must be >= 1");
  if (mean.size() != 2 * modes)
    throw DimensionMismatch("state JSON: mean length must equal 2 * modes");
  return make_state(mean, cov);
}

GaussianState read_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on file: " + path);
  return state_from_json(buf.str());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << text;
  if (!out) throw IoError("write failure on file: " + path);
}

std::string fingerprint(const GaussianState& state) {
  const std::string canon = state_to_json(state);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string record_to_jsonl(const EPICheckRecord& rec) {
  std::string out = "{\"functional\":\"" + rec.functional + "\"";
  out += ",\"modes\":" + std::to_string(rec.modes);
  out += ",\"p\":" + fp17(rec.p);
  out += ",\"kappa\":" + fp17(rec.kappa);
  out += ",\"tau\":" + fp17(rec.tau);
  out += ",\"lhs\":" + fp17(rec.lhs);
  out += ",\"rhs\":" + fp17(rec.rhs);
  out += ",\"slack\":" + fp17(rec.slack);
  out += std::string(",\"pass\":") + boolean(rec.pass);
  out += std::string(",\"kappa_admissible\":") + boolean(rec.kappa_admissible);
  out += std::string(",\"reevaluated\":") + boolean(rec.reevaluated);
  out += ",\"seed\":" + std::to_string(rec.seed);
  out += ",\"x_fingerprint\":\"" + rec.x_fingerprint + "\"";
  out += ",\"y_fingerprint\":\"" + rec.y_fingerprint + "\"}";
  return out;
}

std::string summary_to_csv(const std::vector<BatterySummaryRow>& rows) {
  std::string out =
      "functional,D,p,kappa,tau,trials,failures,min_slack,min_slack_seed\n";
  for (const BatterySummaryRow& row : rows) {
    out += row.functional;
    out += ',' + std::to_string(row.modes);
    out += ',' + fp17(row.p);
    out += ',' + fp17(row.kappa);
    out += ',' + fp17(row.tau);
    out += ',' + std::to_string(row.trials);
    out += ',' + std::to_string(row.failures);
    out += ',' + fp17(row.min_slack);
    out += ',' + std::to_string(row.min_slack_seed);
    out += '\n';
  }
  return out;
}

std::string young_record_to_json(const YoungCheckRecord& rec) {
  std::string out = "{\"dims\":" + std::to_string(rec.dims);
  out += ",\"r\":" + fp17(rec.r);
  out += ",\"s\":" + fp17(rec.s);
  out += ",\"t\":" + fp17(rec.t);
  out += ",\"tau\":" + fp17(rec.tau);
  out += ",\"constant_k\":" + fp17(rec.constant_k);
  out += ",\"lhs_plain\":" + fp17(rec.lhs_plain);
  out += ",\"lhs_scaled\":" + fp17(rec.lhs_scaled);
  out += ",\"rhs_base\":" + fp17(rec.rhs_base);
  out += ",\"rhs_half_exponent\":" + fp17(rec.rhs_half_exponent);
  out += ",\"rhs_full_exponent\":" + fp17(rec.rhs_full_exponent);
  out += std::string(",\"plain_holds_half\":") + boolean(rec.plain_holds_half);
  out += std::string(",\"plain_holds_full\":") + boolean(rec.plain_holds_full);
  out += std::string(",\"scaled_holds_half\":") + boolean(rec.scaled_holds_half);
  out += std::string(",\"scaled_holds_full\":") + boolean(rec.scaled_holds_full);
  out += ",\"power_lhs\":" + fp17(rec.power_lhs);
  out += ",\"power_rhs_mixed\":" + fp17(rec.power_rhs_mixed);
  out += ",\"power_rhs_mixed_weighted\":" + fp17(rec.power_rhs_mixed_weighted);
  out += ",\"power_rhs_merged\":" + fp17(rec.power_rhs_merged);
  out += std::string(",\"power_mixed_holds\":") + boolean(rec.power_mixed_holds);
  out += std::string(",\"power_mixed_weighted_holds\":") +
         boolean(rec.power_mixed_weighted_holds);
  out += std::string(",\"power_merged_holds\":") + boolean(rec.power_merged_holds);
  out += '}';
  return out;
}

std::string witness_record_to_json(const WitnessRecord& rec, bool bits) {
  const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
  std::string out = "{\"zeta\":" + fp17(rec.zeta);
  out += std::string(",\"units\":\"") + (bits ? "bits" : "nats") + "\"";
  out += ",\"output_entropy\":" + fp17(rec.output_entropy * scale);
  out += ",\"entropy_threshold\":" + fp17(rec.entropy_threshold * scale);
  out += ",\"output_purity\":" + fp17(rec.output_purity);
  out += ",\"purity_threshold\":" + fp17(rec.purity_threshold);
  out += std::string(",\"entropy_flag\":") + boolean(rec.entropy_flag);
  out += std::string(",\"purity_flag\":") + boolean(rec.purity_flag);
  out += ",\"renyi_order\":" + fp17(rec.renyi_order);
  out += ",\"output_renyi_entropy\":" + fp17(rec.output_renyi_entropy * scale);
  out += std::string(",\"renyi_flag\":") + boolean(rec.renyi_flag);
  out += std::string(",\"conjectural\":") + boolean(rec.conjectural);
  out += '}';
  return out;
}

std::string capacity_csv_header(bool bits) {
  const char* unit = bits ? "bits" : "nats";
  return std::string("tau,mean_photons,env_photons,lower_bound_") + unit +
         ",upper_bound_" + unit + ",gap_" + unit;
}

std::string capacity_csv_row(double tau, double mean_photons, double env_photons,
                             bool bits) {
  const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
  const double lb = holevo_lower_bound(tau, mean_photons, env_photons) * scale;
  const double ub = capacity_upper_bound(tau, mean_photons, env_photons) * scale;
  return fp17(tau) + "," + fp17(mean_photons) + "," + fp17(env_photons) + "," +
         fp17(lb) + "," + fp17(ub) + "," + fp17(ub - lb);
}

}  // namespace qepi
