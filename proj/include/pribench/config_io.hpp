#pragma once

#include <string>

#include "pribench/algorithms.hpp"
#include "pribench/moea_core.hpp"
#include "pribench/radar_model.hpp"

namespace pribench {

// Everything the harness reads from a config file. Defaults embed the
// published model characteristics exactly.
struct Config {
    RadarParams radar;
    EvaluationConfig eval;
    VariationConfig variation;
    AlgorithmParams algorithm;
};

std::string config_to_json(const Config& cfg);
Config config_from_json_text(const std::string& text);
Config load_config(const std::string& path);
void save_config(const std::string& path, const Config& cfg);

// Canonical serialization of the objective model only (used for hashing).
std::string model_json(const RadarParams& params, const EvaluationConfig& config);

}  // namespace pribench
