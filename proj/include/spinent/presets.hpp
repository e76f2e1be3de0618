#pragma once

// Frozen parameter sets for the figure reproductions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinent/model.hpp"
#include "spinent/scenario.hpp"

namespace spinent {

/// Two resonators with the shared experimental parameters (n = 1.48, m = 15 ng,
/// R = 36 um, lambda = 780 nm, kappa_0/2pi = 15 MHz, omega_m/2pi = 88.54 MHz,
/// gamma_m/2pi = 2.2 kHz) and fiber couplings kappa_ex/2pi = 27 MHz (left),
/// 30 MHz (right). P = 20 mW, T = 100 mK, phi = 0, eta_f = 1, stationary,
/// left input at Delta = omega_m,l.
Scenario paper_scenario();

enum class FigureKind {
  detuning_pair,     // E_N(left), E_N(right) over Delta/omega_m,l
  mismatch_pair,     // same, repeated for several chi values
  revival_map,       // 2D revival-factor density
  wigner             // reduced CMs and Wigner projections, both directions
};

struct FigurePreset {
  std::string name;
  FigureKind kind = FigureKind::detuning_pair;
  Scenario scenario;
  std::vector<AxisSpec> axes;          // detuning axis, or the two map axes
  std::vector<double> chi_values;      // mismatch_pair only
  AxisSpec baseline_axis;              // revival_map only
};

inline constexpr std::string_view figure_names[] = {"fig1b", "fig1c", "fig1d", "fig2a", "fig2b",
                                                    "fig2cd", "fig2e", "fig2f", "fig3"};

/// Throws ConfigError for unknown names.
FigurePreset figure_preset(std::string_view name);

/// Same preset with every plotted axis resampled to `points` values over its original
/// range. The revival baseline axis keeps its resolution.
FigurePreset with_resolution(FigurePreset preset, int points);

}  // namespace spinent
