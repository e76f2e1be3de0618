#include "spinent/config.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <utility>

#include "spinent/constants.hpp"
#include "spinent/errors.hpp"
#include "spinent/presets.hpp"

namespace spinent {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

enum class Quantity { rate, length, mass, power, temperature, angle, inverse_length, dimensionless };

struct UnitTable {
  const char* canonical;
  bool unit_mandatory;
  std::map<std::string, double, std::less<>> factors;
};

const UnitTable& units(Quantity q) {
  static const std::map<Quantity, UnitTable> tables = {
      {Quantity::rate,
       {"rad/s", true,
        {{"rad/s", 1.0},
         {"MHz_rad", 1e6},
         {"Hz", constants::two_pi},
         {"kHz", constants::two_pi * 1e3},
         {"MHz", constants::two_pi * 1e6},
         {"GHz", constants::two_pi * 1e9}}}},
      {Quantity::length, {"m", false, {{"m", 1.0}, {"km", 1e3}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}}}},
      {Quantity::mass,
       {"kg", false, {{"kg", 1.0}, {"g", 1e-3}, {"mg", 1e-6}, {"ug", 1e-9}, {"ng", 1e-12}, {"pg", 1e-15}}}},
      {Quantity::power, {"W", false, {{"W", 1.0}, {"mW", 1e-3}, {"uW", 1e-6}}}},
      {Quantity::temperature, {"K", false, {{"K", 1.0}, {"mK", 1e-3}, {"uK", 1e-6}}}},
      {Quantity::angle, {"rad", false, {{"rad", 1.0}, {"deg", std::numbers::pi / 180.0}}}},
      {Quantity::inverse_length, {"1/m", false, {{"1/m", 1.0}, {"1/um", 1e6}, {"1/nm", 1e9}}}},
      {Quantity::dimensionless, {"1", false, {{"1", 1.0}}}},
  };
  return tables.at(q);
}

[[noreturn]] void fail(const std::string& path, const std::string& why) { throw ConfigError(path + ": " + why); }

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path, "must be finite");
  return x;
}

double quantity(const json& v, Quantity q, const std::string& path) {
  const UnitTable& table = units(q);
  if (v.is_object()) {
    for (const auto& [key, _] : v.items())
      if (key != "value" && key != "unit") fail(path + "." + key, "unknown key");
    if (!v.contains("value")) fail(path + ".value", "missing");
    if (!v.contains("unit") || !v["unit"].is_string()) fail(path + ".unit", "unit missing");
    const std::string unit = v["unit"].get<std::string>();
    const auto it = table.factors.find(unit);
    if (it == table.factors.end()) fail(path + ".unit", "unsupported unit '" + unit + "'");
    return number(v["value"], path + ".value") * it->second;
  }
  if (table.unit_mandatory) fail(path, "unit missing (use {\"value\": x, \"unit\": \"Hz|kHz|MHz|GHz|rad/s|MHz_rad\"})");
  return number(v, path);
}

ordered_json tagged(double value, Quantity q) { return {{"value", value}, {"unit", units(q).canonical}}; }

// Scenario keys and the quantity each one holds.
const std::map<std::string, Quantity, std::less<>>& scenario_keys() {
  static const auto keys = [] {
    std::map<std::string, Quantity, std::less<>> k;
    for (const char* s : {"_l", "_r"}) {
      const std::string sfx = s;
      k["n" + sfx] = Quantity::dimensionless;
      k["radius" + sfx] = Quantity::length;
      k["mass" + sfx] = Quantity::mass;
      k["wavelength" + sfx] = Quantity::length;
      k["omega_c" + sfx] = Quantity::rate;
      k["kappa0" + sfx] = Quantity::rate;
      k["kappa_ex" + sfx] = Quantity::rate;
      k["omega_m" + sfx] = Quantity::rate;
      k["gamma_m" + sfx] = Quantity::rate;
      k["dn_dlambda" + sfx] = Quantity::inverse_length;
      k["omega" + sfx] = Quantity::rate;
    }
    k["chi"] = Quantity::dimensionless;
    k["eta_f"] = Quantity::dimensionless;
    k["phi"] = Quantity::angle;
    k["fiber_length"] = Quantity::length;
    k["fiber_index"] = Quantity::dimensionless;
    k["power"] = Quantity::power;
    k["detuning"] = Quantity::rate;
    k["delta_over_wml"] = Quantity::dimensionless;
    k["drive_phase"] = Quantity::angle;
    k["temperature"] = Quantity::temperature;
    return k;
  }();
  return keys;
}

// Keys that describe the same field; setting one drops the others.
const std::vector<std::set<std::string>>& exclusive_groups() {
  static const std::vector<std::set<std::string>> groups = {
      {"detuning", "delta_over_wml"},
      {"wavelength_l", "omega_c_l"},
      {"wavelength_r", "omega_c_r"},
      {"phi", "fiber_length", "fiber_index"},
      {"omega_m_r", "chi"},
  };
  return groups;
}

bool is_known_scenario_key(std::string_view key) {
  return scenario_keys().contains(key) || key == "direction" || key == "radiation_pressure_shift" ||
         key == "correlated_cascade_noise";
}

void merge_scenario(json& base, const json& overrides, const std::string& path) {
  if (!overrides.is_object()) fail(path, "expected an object");
  // Overriding one spelling of a field drops the base's other spellings; conflicts
  // inside `overrides` itself survive so parse_scenario can reject them.
  for (const auto& [key, value] : overrides.items()) {
    if (!is_known_scenario_key(key)) fail(path + "." + key, "unknown key");
    for (const auto& group : exclusive_groups())
      if (group.contains(key))
        for (const auto& other : group)
          if (other != key && !overrides.contains(other) &&
              !(key.starts_with("fiber_") && other.starts_with("fiber_")))
            base.erase(other);
  }
  for (const auto& [key, value] : overrides.items()) base[key] = value;
}

ResonatorParams parse_resonator(const json& s, const std::string& sfx, const std::string& path,
                                std::optional<double> omega_m_override) {
  auto field = [&](const std::string& name, Quantity q) -> double {
    const std::string key = name + sfx;
    if (!s.contains(key)) fail(path + "." + key, "missing required field");
    return quantity(s[key], q, path + "." + key);
  };

  ResonatorParams r;
  r.refractive_index = field("n", Quantity::dimensionless);
  r.radius = field("radius", Quantity::length);
  r.mass = field("mass", Quantity::mass);

  const bool has_lambda = s.contains("wavelength" + sfx);
  const bool has_omega_c = s.contains("omega_c" + sfx);
  if (!has_lambda && !has_omega_c) fail(path + ".wavelength" + sfx, "missing required field (or omega_c" + sfx + ")");
  if (has_lambda) r.wavelength = field("wavelength", Quantity::length);
  if (has_omega_c) {
    const double wc = field("omega_c", Quantity::rate);
    if (!(wc > 0.0)) fail(path + ".omega_c" + sfx, "must be > 0");
    const double lambda = constants::two_pi * constants::speed_of_light / wc;
    if (has_lambda && std::abs(lambda - r.wavelength) > 1e-12 * r.wavelength)
      fail(path + ".omega_c" + sfx, "inconsistent with wavelength" + sfx + " (relative 1e-12)");
    if (!has_lambda) r.wavelength = lambda;
  }

  r.kappa_0 = field("kappa0", Quantity::rate);
  r.kappa_ex = field("kappa_ex", Quantity::rate);
  r.omega_m = omega_m_override ? *omega_m_override : field("omega_m", Quantity::rate);
  r.gamma_m = field("gamma_m", Quantity::rate);
  const std::string dn_key = "dn_dlambda" + sfx;
  r.dn_dlambda = s.contains(dn_key) ? quantity(s[dn_key], Quantity::inverse_length, path + "." + dn_key) : 0.0;

  try {
    r.validate(nullptr);
  } catch (const ConfigError& e) {
    // validate() names struct fields; report the config key instead.
    std::string what = e.what();
    const auto colon = what.find(':');
    std::string field = what.substr(0, colon);
    if (field == "kappa_0") field = "kappa0";
    fail(path + "." + field + sfx, colon == std::string::npos ? what : what.substr(colon + 2));
  }
  return r;
}

Scenario parse_scenario(const json& s, const std::string& path) {
  if (!s.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : s.items())
    if (!is_known_scenario_key(key)) fail(path + "." + key, "unknown key");
  auto get = [&](const std::string& key) -> const json& {
    if (!s.contains(key)) fail(path + "." + key, "missing required field");
    return s[key];
  };

  Scenario sc;
  sc.left = parse_resonator(s, "_l", path, std::nullopt);
  std::optional<double> omega_m_r;
  if (s.contains("chi")) {
    if (s.contains("omega_m_r")) fail(path + ".chi", "give either chi or omega_m_r, not both");
    const double chi = quantity(s["chi"], Quantity::dimensionless, path + ".chi");
    if (!(chi > 0.0)) fail(path + ".chi", "must be > 0");
    omega_m_r = chi * sc.left.omega_m;
  }
  sc.right = parse_resonator(s, "_r", path, omega_m_r);

  sc.spin_left = SpinConfig::from_signed(quantity(get("omega_l"), Quantity::rate, path + ".omega_l"));
  sc.spin_right = SpinConfig::from_signed(quantity(get("omega_r"), Quantity::rate, path + ".omega_r"));

  sc.link.transmission = s.contains("eta_f") ? quantity(s["eta_f"], Quantity::dimensionless, path + ".eta_f") : 1.0;
  if (!(sc.link.transmission >= 0.0 && sc.link.transmission <= 1.0))
    fail(path + ".eta_f", "transmission must lie in [0, 1]");
  if (s.contains("phi") && (s.contains("fiber_length") || s.contains("fiber_index")))
    fail(path + ".phi", "give either phi or fiber_length + fiber_index, not both");
  if (s.contains("fiber_length") != s.contains("fiber_index"))
    fail(path + ".fiber_length", "fiber_length and fiber_index must be given together");
  if (s.contains("phi")) {
    sc.link.phase = quantity(s["phi"], Quantity::angle, path + ".phi");
  } else if (s.contains("fiber_length")) {
    const double length = quantity(s["fiber_length"], Quantity::length, path + ".fiber_length");
    const double index = quantity(s["fiber_index"], Quantity::dimensionless, path + ".fiber_index");
    if (!(length >= 0.0)) fail(path + ".fiber_length", "must be >= 0");
    if (!(index > 0.0)) fail(path + ".fiber_index", "must be > 0");
    sc.link.phase = LinkConfig::phase_from_length(index, length, sc.left.wavelength);
  }

  const json& dir = get("direction");
  if (!dir.is_string() || (dir != "left" && dir != "right"))
    fail(path + ".direction", "must be \"left\" or \"right\"");
  sc.drive.direction = dir == "left" ? Direction::left : Direction::right;

  sc.drive.power = quantity(get("power"), Quantity::power, path + ".power");
  if (!(sc.drive.power >= 0.0)) fail(path + ".power", "must be >= 0");

  if (s.contains("detuning") && s.contains("delta_over_wml"))
    fail(path + ".detuning", "give either detuning or delta_over_wml, not both");
  if (s.contains("detuning")) sc.drive.detuning = quantity(s["detuning"], Quantity::rate, path + ".detuning");
  else if (s.contains("delta_over_wml"))
    sc.drive.detuning = quantity(s["delta_over_wml"], Quantity::dimensionless, path + ".delta_over_wml") * sc.left.omega_m;
  else fail(path + ".detuning", "missing required field (or delta_over_wml)");

  sc.drive.phase = s.contains("drive_phase") ? quantity(s["drive_phase"], Quantity::angle, path + ".drive_phase") : 0.0;
  sc.env.temperature =
      s.contains("temperature") ? quantity(s["temperature"], Quantity::temperature, path + ".temperature") : 0.1;
  if (!(sc.env.temperature >= 0.0)) fail(path + ".temperature", "must be >= 0");

  if (s.contains("radiation_pressure_shift")) {
    if (!s["radiation_pressure_shift"].is_boolean()) fail(path + ".radiation_pressure_shift", "expected a boolean");
    sc.radiation_pressure_shift = s["radiation_pressure_shift"].get<bool>();
  }
  if (s.contains("correlated_cascade_noise")) {
    if (!s["correlated_cascade_noise"].is_boolean()) fail(path + ".correlated_cascade_noise", "expected a boolean");
    sc.correlated_cascade_noise = s["correlated_cascade_noise"].get<bool>();
  }

  try {
    sc.validate();
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
  return sc;
}

Quantity axis_quantity(std::string_view parameter) {
  if (parameter == "delta" || parameter == "omega_l" || parameter == "omega_r") return Quantity::rate;
  if (parameter == "power") return Quantity::power;
  if (parameter == "temperature") return Quantity::temperature;
  if (parameter == "phi" || parameter == "drive_phase") return Quantity::angle;
  return Quantity::dimensionless;
}

AxisSpec parse_axis(const json& a, const std::string& path) {
  if (!a.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : a.items())
    if (key != "parameter" && key != "unit" && key != "values" && key != "start" && key != "stop" && key != "points")
      fail(path + "." + key, "unknown key");
  if (!a.contains("parameter") || !a["parameter"].is_string()) fail(path + ".parameter", "missing required field");
  const std::string parameter = a["parameter"].get<std::string>();
  bool known = false;
  for (std::string_view p : sweep_parameters) known = known || p == parameter;
  if (!known) fail(path + ".parameter", "unknown sweep parameter '" + parameter + "'");

  const Quantity q = axis_quantity(parameter);
  const UnitTable& table = units(q);
  double factor = 1.0;
  if (a.contains("unit")) {
    if (!a["unit"].is_string()) fail(path + ".unit", "expected a string");
    const auto it = table.factors.find(a["unit"].get<std::string>());
    if (it == table.factors.end()) fail(path + ".unit", "unsupported unit for " + parameter);
    factor = it->second;
  } else if (table.unit_mandatory) {
    fail(path + ".unit", "unit missing");
  }

  AxisSpec axis;
  if (a.contains("values")) {
    if (a.contains("start") || a.contains("stop") || a.contains("points"))
      fail(path + ".values", "give either values or start/stop/points");
    if (!a["values"].is_array() || a["values"].empty()) fail(path + ".values", "expected a non-empty array");
    axis.parameter = parameter;
    for (std::size_t k = 0; k < a["values"].size(); ++k)
      axis.values.push_back(number(a["values"][k], path + ".values[" + std::to_string(k) + "]") * factor);
  } else {
    for (const char* key : {"start", "stop", "points"})
      if (!a.contains(key)) fail(path + "." + key, "missing required field");
    if (!a["points"].is_number_integer() || a["points"].get<int>() < 1) fail(path + ".points", "expected an integer >= 1");
    axis = AxisSpec::linspace(parameter, number(a["start"], path + ".start") * factor,
                              number(a["stop"], path + ".stop") * factor, a["points"].get<int>());
  }
  axis.unit = table.canonical;
  return axis;
}

ordered_json emit_axis(const AxisSpec& a) {
  return {{"parameter", a.parameter}, {"unit", units(axis_quantity(a.parameter)).canonical}, {"values", a.values}};
}

void check_keys(const json& doc, std::initializer_list<const char*> allowed, const std::string& path) {
  for (const auto& [key, _] : doc.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(path.empty() ? key : path + "." + key, "unknown key");
  }
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::point: return "point";
    case Command::pair: return "pair";
    case Command::sweep: return "sweep";
    case Command::revival: return "revival";
    case Command::wigner: return "wigner";
    case Command::figure: return "figure";
  }
  return "?";
}

Command command_from_string(std::string_view s) {
  for (Command c : {Command::point, Command::pair, Command::sweep, Command::revival, Command::wigner, Command::figure})
    if (s == to_string(c)) return c;
  throw ConfigError("command: unknown command '" + std::string(s) + "'");
}

ordered_json emit_scenario(const Scenario& sc) {
  ordered_json s;
  for (Side side : {Side::left, Side::right}) {
    const std::string sfx = side == Side::left ? "_l" : "_r";
    const ResonatorParams& r = sc.resonator(side);
    s["n" + sfx] = r.refractive_index;
    s["radius" + sfx] = tagged(r.radius, Quantity::length);
    s["mass" + sfx] = tagged(r.mass, Quantity::mass);
    s["wavelength" + sfx] = tagged(r.wavelength, Quantity::length);
    s["kappa0" + sfx] = tagged(r.kappa_0, Quantity::rate);
    s["kappa_ex" + sfx] = tagged(r.kappa_ex, Quantity::rate);
    s["omega_m" + sfx] = tagged(r.omega_m, Quantity::rate);
    s["gamma_m" + sfx] = tagged(r.gamma_m, Quantity::rate);
    s["dn_dlambda" + sfx] = tagged(r.dn_dlambda, Quantity::inverse_length);
    s["omega" + sfx] = tagged(sc.spin(side).signed_rate(), Quantity::rate);
  }
  s["eta_f"] = sc.link.transmission;
  s["phi"] = tagged(sc.link.phase, Quantity::angle);
  s["direction"] = to_string(sc.drive.direction);
  s["power"] = tagged(sc.drive.power, Quantity::power);
  s["detuning"] = tagged(sc.drive.detuning, Quantity::rate);
  s["drive_phase"] = tagged(sc.drive.phase, Quantity::angle);
  s["temperature"] = tagged(sc.env.temperature, Quantity::temperature);
  s["radiation_pressure_shift"] = sc.radiation_pressure_shift;
  s["correlated_cascade_noise"] = sc.correlated_cascade_noise;
  return s;
}

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("config", "expected a JSON object");
  check_keys(doc,
             {"name", "command", "preset", "figure", "scenario", "axes", "baseline_axis", "baseline", "grid",
              "resolution", "out", "threads", "dump_matrices"},
             "");

  RunConfig cfg;
  if (!doc.contains("command") || !doc["command"].is_string()) fail("command", "missing required field");
  cfg.command = command_from_string(doc["command"].get<std::string>());

  if (doc.contains("figure")) {
    if (!doc["figure"].is_string()) fail("figure", "expected a string");
    cfg.figure = doc["figure"].get<std::string>();
  }
  if (cfg.command == Command::figure && !cfg.figure) fail("figure", "missing required field for the figure command");

  // Base scenario: a preset (explicit, or the figure being reproduced) or nothing.
  std::optional<std::string> preset;
  if (doc.contains("preset")) {
    if (!doc["preset"].is_string()) fail("preset", "expected a string");
    preset = doc["preset"].get<std::string>();
  } else if (cfg.figure) {
    preset = cfg.figure;
  }

  json scenario_doc = json::object();
  if (preset) {
    try {
      scenario_doc = json(emit_scenario(figure_preset(*preset).scenario));
    } catch (const ConfigError&) {
      fail(doc.contains("preset") ? "preset" : "figure", "unknown preset '" + *preset + "'");
    }
  }
  const bool overridden = doc.contains("scenario") && !doc["scenario"].empty();
  if (doc.contains("scenario")) merge_scenario(scenario_doc, doc["scenario"], "scenario");
  cfg.scenario = parse_scenario(scenario_doc, "scenario");

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("name", "expected a string");
    cfg.name = doc["name"].get<std::string>();
  } else if (preset) {
    cfg.name = overridden ? *preset + "-derived" : *preset;
  }

  if (doc.contains("axes")) {
    if (!doc["axes"].is_array()) fail("axes", "expected an array");
    for (std::size_t k = 0; k < doc["axes"].size(); ++k)
      cfg.axes.push_back(parse_axis(doc["axes"][k], "axes[" + std::to_string(k) + "]"));
  }
  if (doc.contains("baseline_axis")) cfg.baseline_axis = parse_axis(doc["baseline_axis"], "baseline_axis");
  if (doc.contains("baseline")) {
    json base = json(emit_scenario(cfg.scenario));
    merge_scenario(base, doc["baseline"], "baseline");
    cfg.baseline = parse_scenario(base, "baseline");
  }

  if (cfg.command == Command::sweep && (cfg.axes.empty() || cfg.axes.size() > 2))
    fail("axes", "the sweep command needs one or two axes");
  if (cfg.command == Command::revival && cfg.axes.size() != 1)
    fail("axes", "the revival command needs exactly one axis");

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    if (!g.is_object()) fail("grid", "expected an object");
    check_keys(g, {"points", "half_width"}, "grid");
    if (g.contains("points")) {
      if (!g["points"].is_number_integer() || g["points"].get<int>() < 2) fail("grid.points", "expected an integer >= 2");
      cfg.grid.points = g["points"].get<int>();
    }
    if (g.contains("half_width")) cfg.grid.half_width = number(g["half_width"], "grid.half_width");
  }
  if (doc.contains("resolution")) {
    if (!doc["resolution"].is_number_integer() || doc["resolution"].get<int>() < 1)
      fail("resolution", "expected an integer >= 1");
    cfg.resolution = doc["resolution"].get<int>();
  }
  if (doc.contains("out")) {
    if (!doc["out"].is_string()) fail("out", "expected a string");
    cfg.out_dir = doc["out"].get<std::string>();
  }
  if (doc.contains("threads")) {
    if (!doc["threads"].is_number_integer() || doc["threads"].get<int>() < 1) fail("threads", "expected an integer >= 1");
    cfg.threads = doc["threads"].get<unsigned>();
  }
  if (doc.contains("dump_matrices")) {
    if (!doc["dump_matrices"].is_boolean()) fail("dump_matrices", "expected a boolean");
    cfg.dump_matrices = doc["dump_matrices"].get<bool>();
  }
  return cfg;
}

ordered_json emit_config(const RunConfig& cfg) {
  ordered_json doc;
  doc["name"] = cfg.name;
  doc["command"] = to_string(cfg.command);
  if (cfg.figure) doc["figure"] = *cfg.figure;
  doc["scenario"] = emit_scenario(cfg.scenario);
  if (!cfg.axes.empty()) {
    doc["axes"] = ordered_json::array();
    for (const AxisSpec& a : cfg.axes) doc["axes"].push_back(emit_axis(a));
  }
  if (cfg.baseline_axis) doc["baseline_axis"] = emit_axis(*cfg.baseline_axis);
  if (cfg.baseline) doc["baseline"] = emit_scenario(*cfg.baseline);
  doc["grid"] = {{"points", cfg.grid.points}, {"half_width", cfg.grid.half_width}};
  if (cfg.resolution) doc["resolution"] = *cfg.resolution;
  doc["out"] = cfg.out_dir;
  doc["threads"] = cfg.threads;
  doc["dump_matrices"] = cfg.dump_matrices;
  return doc;
}

void apply_override(json& doc, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) fail("--set", "expected key=value, got '" + std::string(assignment) + "'");
  std::string_view name = assignment.substr(0, eq);
  while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
  const std::string key(name);
  std::string_view text = assignment.substr(eq + 1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

  json value;
  double x = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec == std::errc() && end != text.data()) {
    std::string_view unit(end, static_cast<std::size_t>(text.data() + text.size() - end));
    while (!unit.empty() && unit.front() == ' ') unit.remove_prefix(1);
    if (unit.empty()) value = x;
    else value = {{"value", x}, {"unit", std::string(unit)}};
  } else if (text == "true" || text == "false") {
    value = text == "true";
  } else {
    value = std::string(text);
  }

  if (!doc.contains("scenario")) doc["scenario"] = json::object();
  json single = json::object();
  single[key] = value;
  merge_scenario(doc["scenario"], single, "scenario");
}

}  // namespace spinent
