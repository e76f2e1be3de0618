#pragma once

// Physical parameters of the cascaded spinning resonator pair and the
// closed-form quantities derived from them. Everything is strict SI with
// angular frequencies in rad/s.

#include <array>
#include <cstddef>
#include <utility>

namespace spinent {

/// Physical resonator position along the fiber.
enum class Side { left = 0, right = 1 };

/// Side from which the drive laser enters the fiber.
enum class Direction { left, right };

enum class SpinOrientation { stationary, ccw, cw };

inline constexpr std::size_t index(Side s) { return static_cast<std::size_t>(s); }
inline constexpr Side other(Side s) { return s == Side::left ? Side::right : Side::left; }

/// First and second resonator met by the drive light, in cascade order.
inline constexpr std::pair<Side, Side> cascade_order(Direction d) {
  return d == Direction::left ? std::pair{Side::left, Side::right}
                              : std::pair{Side::right, Side::left};
}

const char* to_string(Side s);
const char* to_string(Direction d);

struct ResonatorParams {
  double refractive_index = 0.0;
  double radius = 0.0;               // m
  double mass = 0.0;                 // kg, effective mass of the breathing mode
  double wavelength = 0.0;           // m, vacuum wavelength of the optical mode
  double kappa_0 = 0.0;              // rad/s, intrinsic optical decay
  double kappa_ex = 0.0;             // rad/s, fiber coupling
  double omega_m = 0.0;              // rad/s
  double gamma_m = 0.0;              // rad/s
  double dn_dlambda = 0.0;           // 1/m

  double omega_c() const;            // 2 pi c / lambda
  double total_decay() const { return kappa_0 + kappa_ex; }

  /// Throws ConfigError naming `prefix.field` on the first violated constraint.
  void validate(const char* prefix) const;

  bool operator==(const ResonatorParams&) const = default;
};

struct SpinConfig {
  double angular_velocity = 0.0;     // rad/s, >= 0
  SpinOrientation orientation = SpinOrientation::stationary;

  /// Positive values spin CCW, negative values CW, zero is stationary.
  static SpinConfig from_signed(double omega);
  /// Inverse of from_signed.
  double signed_rate() const;
  void validate(const char* prefix) const;

  bool operator==(const SpinConfig&) const = default;
};

struct LinkConfig {
  double transmission = 1.0;         // power transmission eta_f in [0, 1]
  double phase = 0.0;                // rad

  /// Propagation phase 2 pi n L / lambda of a fiber of length L.
  static double phase_from_length(double fiber_index, double length, double wavelength);
  void validate() const;

  bool operator==(const LinkConfig&) const = default;
};

struct DriveConfig {
  Direction direction = Direction::left;
  double power = 0.0;                // W
  double detuning = 0.0;             // rad/s, shared cavity-drive detuning
  double phase = 0.0;                // rad, global phase of the drive field
  void validate() const;

  bool operator==(const DriveConfig&) const = default;
};

struct Environment {
  double temperature = 0.1;          // K
  void validate() const;

  bool operator==(const Environment&) const = default;
};

struct Scenario {
  ResonatorParams left;
  ResonatorParams right;
  SpinConfig spin_left;
  SpinConfig spin_right;
  LinkConfig link;
  DriveConfig drive;
  Environment env;
  /// Self-consistent radiation-pressure detuning correction. Off by default.
  bool radiation_pressure_shift = false;
  /// Correlate the fiber input noise seen by both resonators (cascaded-systems
  /// input noise). Off by default: the reference model uses a diagonal D.
  bool correlated_cascade_noise = false;

  const ResonatorParams& resonator(Side s) const { return s == Side::left ? left : right; }
  ResonatorParams& resonator(Side s) { return s == Side::left ? left : right; }
  const SpinConfig& spin(Side s) const { return s == Side::left ? spin_left : spin_right; }
  SpinConfig& spin(Side s) { return s == Side::left ? spin_left : spin_right; }

  /// Laser angular frequency: omega_c of the driven resonator minus the detuning.
  double drive_frequency() const;
  void validate() const;

  bool operator==(const Scenario&) const = default;
};

/// Signed Sagnac-Fizeau shift of the mode excited by light entering from `direction`.
/// Positive for (CCW, left input) and (CW, right input).
double sagnac_shift(const ResonatorParams& res, const SpinConfig& spin, Direction direction);

/// Single-photon optomechanical coupling g0 = (omega_c / R) sqrt(hbar / (m omega_m)).
double single_photon_coupling(const ResonatorParams& res);

/// |eps_d| = sqrt(P / (hbar omega_d)), in sqrt(1/s).
double drive_amplitude(double power, double drive_frequency);
double drive_amplitude(const Scenario& sc);

/// Bose-Einstein occupation; exactly 0 at T = 0.
double thermal_occupancy(double omega_m, double temperature);

/// Detunings Delta + Delta_F for (left, right), radiation-pressure shift neglected.
std::array<double, 2> effective_detunings(const Scenario& sc);

}  // namespace spinent
