#pragma once

// End-to-end evaluation: Scenario -> steady state -> linear system -> covariance
// -> mechanical-mechanical entanglement, plus sweeps and the revival coefficient.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinent/dynamics.hpp"
#include "spinent/model.hpp"

namespace spinent {

struct ScenarioResult {
  Scenario scenario;
  std::array<double, 2> photons{};          // N_l, N_r
  bool stable = false;
  double margin = 0.0;                      // max Re(eig(A)), rad/s
  std::optional<double> nu_minus;           // present only when stable
  std::optional<double> log_negativity;     // present only when stable
  std::optional<double> relative_residual;
  std::optional<double> min_symplectic;     // of the full 8x8 V; < 1/2 means non-physical
  bool physical = false;                    // stable and min_symplectic >= 1/2 - 1e-9
  std::optional<std::string> warning;
  std::optional<Matrix8d> drift;            // filled when RunOptions::keep_matrices
  std::optional<Matrix8d> diffusion;
  std::optional<Matrix8d> covariance;       // stable + keep_matrices only
};

struct RunOptions {
  bool keep_matrices = false;
};

/// Unstable scenarios come back flagged with no entanglement values; numerical
/// failures propagate as NumericalError.
ScenarioResult run_scenario(const Scenario& sc, const RunOptions& opts = {});

struct DirectionalPair {
  ScenarioResult left;
  ScenarioResult right;
  std::optional<double> delta_log_negativity;   // E_N(left) - E_N(right), both stable
};

DirectionalPair directional_pair(const Scenario& sc, const RunOptions& opts = {});

/// Sweepable scenario fields.
inline constexpr std::array<std::string_view, 10> sweep_parameters = {
    "delta_over_wml", "delta", "omega_l", "omega_r", "chi", "phi", "eta_f", "power", "temperature", "drive_phase"};

/// Sets one sweepable field. `chi` rescales omega_m of the right resonator against the
/// left one; `omega_l`/`omega_r` are signed spin rates (positive = CCW). Throws
/// ConfigError for unknown names.
void apply_parameter(Scenario& sc, std::string_view name, double value);

/// Current value of a sweepable field (inverse of apply_parameter).
double read_parameter(const Scenario& sc, std::string_view name);

struct AxisSpec {
  std::string parameter;
  std::vector<double> values;   // internal units (rad/s for rates)
  std::string unit;             // label of the internal unit ("rad/s", "1", "W", ...)

  static AxisSpec linspace(std::string parameter, double start, double stop, int points,
                           std::string unit = {});

  bool operator==(const AxisSpec&) const = default;
};

/// Columnar results; row r has axis coordinates with the last axis varying fastest.
struct SweepTable {
  std::vector<AxisSpec> axes;
  std::vector<std::vector<double>> coordinates;   // [axis][row]
  std::vector<bool> stable;
  std::vector<bool> physical;
  std::vector<double> margin;
  std::vector<double> photons_left;
  std::vector<double> photons_right;
  std::vector<double> nu_minus;                   // NaN when unstable
  std::vector<double> relative_residual;          // Lyapunov residual, NaN when unstable
  std::vector<double> log_negativity;             // NaN when unstable

  std::size_t rows() const { return stable.size(); }
  /// Largest E_N over stable rows, 0 when none is stable.
  double max_log_negativity() const;
};

struct SweepOptions {
  unsigned threads = 1;
};

/// Full grid over 1 or 2 axes. Grid points are independent and are evaluated on
/// `threads` workers; the table is always assembled in index order.
SweepTable sweep(const Scenario& sc, const std::vector<AxisSpec>& axes, const SweepOptions& opts = {});

struct RevivalResult {
  double numerator_max = 0.0;
  double denominator_max = 0.0;
  double ratio = 0.0;
};

/// max E_N of `numerator` over its axis divided by max E_N of `baseline` over its axis.
/// Throws NumericalError when the baseline maximum is <= 1e-12.
RevivalResult revival_coefficient(const Scenario& numerator, const AxisSpec& numerator_axis,
                                  const Scenario& baseline, const AxisSpec& baseline_axis,
                                  const SweepOptions& opts = {});

/// Same scenario with both resonators stationary and omega_m,r = omega_m,l.
Scenario static_matched(const Scenario& sc);

/// Revival factor per grid point: E_N at the point divided by the maximum of the
/// static matched configuration over `baseline_axis` (same drive direction).
struct RevivalMap {
  SweepTable table;
  double baseline_max = 0.0;
  std::vector<double> ratio;     // NaN when the point is unstable
};

RevivalMap revival_map(const Scenario& sc, const std::vector<AxisSpec>& axes,
                       const AxisSpec& baseline_axis, const SweepOptions& opts = {});

}  // namespace spinent
