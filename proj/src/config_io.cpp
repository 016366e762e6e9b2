#include "pribench/config_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pribench {

namespace {

using nlohmann::json;

json radar_to_json(const RadarParams& r) {
    json j;
    j["base_carrier_hz"] = r.base_carrier_hz;
    j["carrier_step_hz"] = r.carrier_step_hz;
    j["pri_min_s"] = r.pri_min_s;
    j["pri_max_s"] = r.pri_max_s;
    j["pri_quantum_s"] = r.pri_quantum_s;
    j["compressed_pulsewidth_s"] = r.compressed_pulsewidth_s;
    j["recovery_time_s"] = r.recovery_time_s;
    j["range_resolution_m"] = r.range_resolution_m;
    j["fft_size"] = r.fft_size;
    j["duty_cycle"] = r.duty_cycle;
    j["max_dwell_s"] = r.max_dwell_s;
    j["max_velocity_mps"] = r.max_velocity_mps;
    j["max_range_m"] = r.max_range_m;
    j["coincidence"] = r.coincidence;
    j["speed_of_light_mps"] = r.speed_of_light_mps;
    return j;
}

void radar_from_json(const json& j, RadarParams& r) {
    r.base_carrier_hz = j.value("base_carrier_hz", r.base_carrier_hz);
    r.carrier_step_hz = j.value("carrier_step_hz", r.carrier_step_hz);
    r.pri_min_s = j.value("pri_min_s", r.pri_min_s);
    r.pri_max_s = j.value("pri_max_s", r.pri_max_s);
    r.pri_quantum_s = j.value("pri_quantum_s", r.pri_quantum_s);
    r.compressed_pulsewidth_s = j.value("compressed_pulsewidth_s", r.compressed_pulsewidth_s);
    r.recovery_time_s = j.value("recovery_time_s", r.recovery_time_s);
    r.range_resolution_m = j.value("range_resolution_m", r.range_resolution_m);
    r.fft_size = j.value("fft_size", r.fft_size);
    r.duty_cycle = j.value("duty_cycle", r.duty_cycle);
    r.max_dwell_s = j.value("max_dwell_s", r.max_dwell_s);
    r.max_velocity_mps = j.value("max_velocity_mps", r.max_velocity_mps);
    r.max_range_m = j.value("max_range_m", r.max_range_m);
    r.coincidence = j.value("coincidence", r.coincidence);
    r.speed_of_light_mps = j.value("speed_of_light_mps", r.speed_of_light_mps);
}

json eval_to_json(const EvaluationConfig& e) {
    json j;
    j["range_cell_stride"] = e.range_cell_stride;
    j["velocity_grid_step_mps"] = e.velocity_grid_step_mps;
    j["notch_bins"] = e.notch_bins;
    j["target_extent_cells"] = e.target_extent_cells;
    j["range_tolerance_cap_m"] = e.range_tolerance_cap_m;
    j["velocity_tolerance_cap_mps"] = e.velocity_tolerance_cap_mps;
    j["min_range_m"] = e.min_range_m;
    j["min_velocity_mps"] = e.min_velocity_mps;
    return j;
}

void eval_from_json(const json& j, EvaluationConfig& e) {
    e.range_cell_stride = j.value("range_cell_stride", e.range_cell_stride);
    e.velocity_grid_step_mps = j.value("velocity_grid_step_mps", e.velocity_grid_step_mps);
    e.notch_bins = j.value("notch_bins", e.notch_bins);
    e.target_extent_cells = j.value("target_extent_cells", e.target_extent_cells);
    e.range_tolerance_cap_m = j.value("range_tolerance_cap_m", e.range_tolerance_cap_m);
    e.velocity_tolerance_cap_mps = j.value("velocity_tolerance_cap_mps", e.velocity_tolerance_cap_mps);
    e.min_range_m = j.value("min_range_m", e.min_range_m);
    e.min_velocity_mps = j.value("min_velocity_mps", e.min_velocity_mps);
}

json variation_to_json(const VariationConfig& v) {
    json j;
    j["sbx_eta"] = v.sbx_eta;
    j["sbx_prob"] = v.sbx_prob;
    j["pm_eta"] = v.pm_eta;
    j["pm_prob"] = v.pm_prob;
    return j;
}

void variation_from_json(const json& j, VariationConfig& v) {
    v.sbx_eta = j.value("sbx_eta", v.sbx_eta);
    v.sbx_prob = j.value("sbx_prob", v.sbx_prob);
    v.pm_eta = j.value("pm_eta", v.pm_eta);
    v.pm_prob = j.value("pm_prob", v.pm_prob);
}

json algorithm_to_json(const AlgorithmParams& a) {
    json j;
    j["ibea_kappa"] = a.ibea_kappa;
    j["grea_divisions"] = a.grea_divisions;
    j["theta"] = a.theta;
    j["ref_outer_divisions"] = a.ref_outer_divisions;
    j["ref_inner_divisions"] = a.ref_inner_divisions;
    j["ref_inner_shrink"] = a.ref_inner_shrink;
    j["msops_targets"] = a.msops_targets;
    j["vads_power"] = a.vads_power;
    return j;
}

void algorithm_from_json(const json& j, AlgorithmParams& a) {
    a.ibea_kappa = j.value("ibea_kappa", a.ibea_kappa);
    a.grea_divisions = j.value("grea_divisions", a.grea_divisions);
    a.theta = j.value("theta", a.theta);
    a.ref_outer_divisions = j.value("ref_outer_divisions", a.ref_outer_divisions);
    a.ref_inner_divisions = j.value("ref_inner_divisions", a.ref_inner_divisions);
    a.ref_inner_shrink = j.value("ref_inner_shrink", a.ref_inner_shrink);
    a.msops_targets = j.value("msops_targets", a.msops_targets);
    a.vads_power = j.value("vads_power", a.vads_power);
}

}  // namespace

std::string config_to_json(const Config& cfg) {
    json j;
    j["radar"] = radar_to_json(cfg.radar);
    j["evaluation"] = eval_to_json(cfg.eval);
    j["variation"] = variation_to_json(cfg.variation);
    j["algorithm"] = algorithm_to_json(cfg.algorithm);
    return j.dump(2) + "\n";
}

Config config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    Config cfg;
    if (j.contains("radar")) radar_from_json(j.at("radar"), cfg.radar);
    if (j.contains("evaluation")) eval_from_json(j.at("evaluation"), cfg.eval);
    if (j.contains("variation")) variation_from_json(j.at("variation"), cfg.variation);
    if (j.contains("algorithm")) algorithm_from_json(j.at("algorithm"), cfg.algorithm);
    cfg.radar.validate();
    cfg.eval.validate();
    cfg.algorithm.validate();
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

void save_config(const std::string& path, const Config& cfg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config file: " + path);
    out << config_to_json(cfg);
}

std::string model_json(const RadarParams& params, const EvaluationConfig& config) {
    json j;
    j["radar"] = radar_to_json(params);
    j["evaluation"] = eval_to_json(config);
    return j.dump();  // canonical: sorted keys, no whitespace
}

}  // namespace pribench
