#pragma once

#include <string>

#include <json.hpp>

#include "symdec/code.hpp"
#include "symdec/harness.hpp"
#include "symdec/noise.hpp"
#include "symdec/symmetry.hpp"
#include "symdec/syndrome.hpp"

namespace symdec {

nlohmann::json code_to_json(const StabilizerCode& code);
StabilizerCode code_from_json(const nlohmann::json& j);

nlohmann::json channel_to_json(const NoiseModel& model);
NoiseModel channel_from_json(const nlohmann::json& j);

nlohmann::json symmetry_to_json(const Symmetry& sigma);
Symmetry symmetry_from_json(const nlohmann::json& j, size_t n);

nlohmann::json events_to_json(const DetectionEvents& events);
DetectionEvents events_from_json(const nlohmann::json& j);

ExperimentConfig config_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace symdec
