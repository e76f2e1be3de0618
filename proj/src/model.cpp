#include "spinent/model.hpp"

#include <cmath>
#include <string>

#include "spinent/constants.hpp"
#include "spinent/errors.hpp"

namespace spinent {

namespace {

[[noreturn]] void reject(const char* prefix, const char* field, const std::string& why) {
  std::string path = prefix ? std::string(prefix) + "." + field : std::string(field);
  throw ConfigError(path + ": " + why);
}

void require_positive(const char* prefix, const char* field, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) reject(prefix, field, "must be finite and > 0");
}

}  // namespace

const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }
const char* to_string(Direction d) { return d == Direction::left ? "left" : "right"; }

double ResonatorParams::omega_c() const {
  return constants::two_pi * constants::speed_of_light / wavelength;
}

void ResonatorParams::validate(const char* prefix) const {
  if (!(refractive_index > 1.0) || !std::isfinite(refractive_index))
    reject(prefix, "n", "refractive index must be > 1");
  require_positive(prefix, "radius", radius);
  require_positive(prefix, "mass", mass);
  require_positive(prefix, "wavelength", wavelength);
  require_positive(prefix, "kappa_0", kappa_0);
  require_positive(prefix, "kappa_ex", kappa_ex);
  require_positive(prefix, "omega_m", omega_m);
  require_positive(prefix, "gamma_m", gamma_m);
  if (!std::isfinite(dn_dlambda)) reject(prefix, "dn_dlambda", "must be finite");
}

SpinConfig SpinConfig::from_signed(double omega) {
  if (omega > 0.0) return {omega, SpinOrientation::ccw};
  if (omega < 0.0) return {-omega, SpinOrientation::cw};
  return {};
}

double SpinConfig::signed_rate() const {
  switch (orientation) {
    case SpinOrientation::ccw: return angular_velocity;
    case SpinOrientation::cw: return -angular_velocity;
    case SpinOrientation::stationary: break;
  }
  return 0.0;
}

void SpinConfig::validate(const char* prefix) const {
  if (!(angular_velocity >= 0.0) || !std::isfinite(angular_velocity))
    reject(prefix, "angular_velocity", "must be finite and >= 0");
  if ((orientation == SpinOrientation::stationary) != (angular_velocity == 0.0))
    reject(prefix, "orientation", "stationary orientation if and only if angular velocity is 0");
}

double LinkConfig::phase_from_length(double fiber_index, double length, double wavelength) {
  return constants::two_pi * fiber_index * length / wavelength;
}

void LinkConfig::validate() const {
  if (!(transmission >= 0.0 && transmission <= 1.0))
    reject(nullptr, "eta_f", "transmission must lie in [0, 1]");
  if (!std::isfinite(phase)) reject(nullptr, "phi", "must be finite");
}

void DriveConfig::validate() const {
  if (!(power >= 0.0) || !std::isfinite(power)) reject(nullptr, "power", "must be finite and >= 0");
  if (!std::isfinite(detuning)) reject(nullptr, "detuning", "must be finite");
  if (!std::isfinite(phase)) reject(nullptr, "drive_phase", "must be finite");
}

void Environment::validate() const {
  if (!(temperature >= 0.0) || !std::isfinite(temperature))
    reject(nullptr, "temperature", "must be finite and >= 0");
}

double Scenario::drive_frequency() const {
  return resonator(cascade_order(drive.direction).first).omega_c() - drive.detuning;
}

void Scenario::validate() const {
  left.validate("left");
  right.validate("right");
  spin_left.validate("spin_left");
  spin_right.validate("spin_right");
  link.validate();
  drive.validate();
  env.validate();
  if (!(drive_frequency() > 0.0)) reject(nullptr, "detuning", "drive frequency must be positive");
}

double sagnac_shift(const ResonatorParams& res, const SpinConfig& spin, Direction direction) {
  const double omega = spin.signed_rate();
  if (omega == 0.0) return 0.0;
  const double n = res.refractive_index;
  const double scale = n * res.radius * res.omega_c() / constants::speed_of_light;
  const double dispersion = 1.0 - 1.0 / (n * n) - (res.wavelength / n) * res.dn_dlambda;
  const double sign = direction == Direction::left ? 1.0 : -1.0;
  return sign * omega * scale * dispersion;
}

double single_photon_coupling(const ResonatorParams& res) {
  return res.omega_c() / res.radius * std::sqrt(constants::hbar / (res.mass * res.omega_m));
}

double drive_amplitude(double power, double drive_frequency) {
  if (power == 0.0) return 0.0;
  return std::sqrt(power / (constants::hbar * drive_frequency));
}

double drive_amplitude(const Scenario& sc) {
  return drive_amplitude(sc.drive.power, sc.drive_frequency());
}

double thermal_occupancy(double omega_m, double temperature) {
  if (temperature == 0.0) return 0.0;
  const double x = constants::hbar * omega_m / (constants::boltzmann * temperature);
  return 1.0 / std::expm1(x);
}

std::array<double, 2> effective_detunings(const Scenario& sc) {
  const Direction d = sc.drive.direction;
  return {sc.drive.detuning + sagnac_shift(sc.left, sc.spin_left, d),
          sc.drive.detuning + sagnac_shift(sc.right, sc.spin_right, d)};
}

}  // namespace spinent
