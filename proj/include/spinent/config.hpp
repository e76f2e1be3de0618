#pragma once

// Run configuration: JSON-object config text <-> validated RunConfig.
//
// Every rate field carries an explicit unit object, e.g.
//   "kappa_ex_l": {"value": 27, "unit": "MHz"}      -> 2 pi * 27e6 rad/s
//   "omega_l":    {"value": 0.6, "unit": "MHz_rad"} -> 0.6e6 rad/s
// Other dimensional fields accept either a unit object or a bare SI number.
// Unknown keys are rejected. The full schema is in the README.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinent/gaussian.hpp"
#include "spinent/model.hpp"
#include "spinent/scenario.hpp"

namespace spinent {

enum class Command { point, pair, sweep, revival, wigner, figure };

const char* to_string(Command c);
Command command_from_string(std::string_view s);

struct RunConfig {
  std::string name = "custom";
  Command command = Command::point;
  std::optional<std::string> figure;     // figure command only
  Scenario scenario;
  std::vector<AxisSpec> axes;            // sweep / revival numerator axis
  std::optional<AxisSpec> baseline_axis; // revival; defaults to the numerator axis
  std::optional<Scenario> baseline;      // revival; defaults to static_matched(scenario)
  GridSpec grid;                         // wigner
  std::optional<int> resolution;         // figure axis resampling
  std::string out_dir = ".";
  unsigned threads = 1;
  bool dump_matrices = false;

  bool operator==(const RunConfig&) const = default;
};

/// Parses and validates config text. Throws ConfigError whose message starts with
/// the offending field path.
RunConfig parse_config(std::string_view text);
RunConfig parse_config(const nlohmann::json& doc);

/// Fully resolved config as JSON; parse_config(emit_config(c)) == c.
nlohmann::ordered_json emit_config(const RunConfig& cfg);
nlohmann::ordered_json emit_scenario(const Scenario& sc);

/// Applies a `key=value` override to the "scenario" object of a config document.
/// Values may carry a unit suffix ("27MHz", "0.8 MHz_rad", "100mK"); bare words
/// become strings and true/false booleans.
void apply_override(nlohmann::json& doc, std::string_view assignment);

}  // namespace spinent
