#include "spinent/presets.hpp"

#include "spinent/constants.hpp"
#include "spinent/errors.hpp"

namespace spinent {

namespace {

constexpr double mhz_rad = 1e6;  // angular velocities are quoted in units of 10^6 rad/s
constexpr int detuning_points = 401;
constexpr int map_points = 101;

double hz(double f) { return constants::two_pi * f; }

AxisSpec detuning_axis() { return AxisSpec::linspace("delta_over_wml", 0.4, 1.4, detuning_points, "1"); }

}  // namespace

Scenario paper_scenario() {
  ResonatorParams res;
  res.refractive_index = 1.48;
  res.radius = 36e-6;
  res.mass = 15e-12;
  res.wavelength = 780e-9;
  res.kappa_0 = hz(15e6);
  res.kappa_ex = hz(27e6);
  res.omega_m = hz(88.54e6);
  res.gamma_m = hz(2.2e3);
  res.dn_dlambda = 0.0;

  Scenario sc;
  sc.left = res;
  sc.right = res;
  sc.right.kappa_ex = hz(30e6);
  sc.link = {1.0, 0.0};
  sc.drive = {Direction::left, 20e-3, res.omega_m, 0.0};
  sc.env.temperature = 0.1;
  return sc;
}

FigurePreset figure_preset(std::string_view name) {
  FigurePreset p;
  p.name = std::string(name);
  p.scenario = paper_scenario();
  Scenario& sc = p.scenario;

  if (name == "fig1b" || name == "fig1c" || name == "fig1d") {
    p.kind = FigureKind::detuning_pair;
    p.axes = {detuning_axis()};
    if (name != "fig1b") sc.spin_left = SpinConfig::from_signed(0.6 * mhz_rad);
    if (name == "fig1d") sc.spin_right = SpinConfig::from_signed(0.6 * mhz_rad);
  } else if (name == "fig2a" || name == "fig2b" || name == "fig2cd") {
    p.kind = FigureKind::mismatch_pair;
    p.axes = {detuning_axis()};
    p.chi_values = {1.0, 0.97, 0.95};
    if (name != "fig2a") sc.spin_left = SpinConfig::from_signed(0.8 * mhz_rad);
    if (name == "fig2b") sc.spin_right = SpinConfig::from_signed(0.8 * mhz_rad);
  } else if (name == "fig2e") {
    p.kind = FigureKind::revival_map;
    sc.drive.direction = Direction::right;
    sc.drive.detuning = sc.left.omega_m;
    p.axes = {AxisSpec::linspace("chi", 0.95, 1.05, map_points, "1"),
              AxisSpec::linspace("omega_l", 0.0, 1.5 * mhz_rad, map_points, "rad/s")};
    p.baseline_axis = detuning_axis();
  } else if (name == "fig2f") {
    p.kind = FigureKind::revival_map;
    sc.drive.direction = Direction::left;
    sc.drive.detuning = 0.68 * sc.left.omega_m;
    sc.right.omega_m = 0.97 * sc.left.omega_m;
    p.axes = {AxisSpec::linspace("omega_l", -1.5 * mhz_rad, 1.5 * mhz_rad, map_points, "rad/s"),
              AxisSpec::linspace("omega_r", -1.5 * mhz_rad, 1.5 * mhz_rad, map_points, "rad/s")};
    p.baseline_axis = detuning_axis();
  } else if (name == "fig3") {
    p.kind = FigureKind::wigner;
    sc.drive.detuning = 0.68 * sc.left.omega_m;
    sc.right.omega_m = 0.95 * sc.left.omega_m;
    sc.spin_left = SpinConfig::from_signed(0.8 * mhz_rad);
  } else {
    throw ConfigError("figure: unknown preset '" + std::string(name) + "'");
  }
  return p;
}

FigurePreset with_resolution(FigurePreset preset, int points) {
  if (points < 1) throw ConfigError("resolution: must be >= 1");
  auto resample = [points](const AxisSpec& a) {
    if (a.values.empty()) return a;
    return AxisSpec::linspace(a.parameter, a.values.front(), a.values.back(), points, a.unit);
  };
  for (AxisSpec& a : preset.axes) a = resample(a);
  return preset;
}

}  // namespace spinent
