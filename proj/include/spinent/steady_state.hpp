#pragma once

#include <array>
#include <complex>

#include "spinent/model.hpp"

namespace spinent {

using complex = std::complex<double>;

/// Classical mean fields of the cascaded chain, indexed by physical Side.
struct SteadyState {
  Direction direction = Direction::left;
  std::array<complex, 2> alpha{};          // optical amplitudes, sqrt(photon)
  std::array<complex, 2> beta{};           // mechanical amplitudes, sqrt(phonon)
  std::array<double, 2> detuning{};        // effective detunings actually used, rad/s
  int detuning_iterations = 0;             // > 0 only with the radiation-pressure correction

  Side first() const { return cascade_order(direction).first; }
  Side second() const { return cascade_order(direction).second; }
  complex optical(Side s) const { return alpha[index(s)]; }
  complex mechanical(Side s) const { return beta[index(s)]; }
  double photons(Side s) const { return std::norm(alpha[index(s)]); }
};

/// Closed-form steady state of the linear cascade for the scenario's drive direction.
/// With `radiation_pressure_shift` set, the detunings are iterated to self-consistency
/// (tolerance 1e-9 omega_m); throws NumericalError if that does not converge.
SteadyState solve_steady_state(const Scenario& sc);

/// Same closed form at externally supplied effective detunings (left, right).
SteadyState steady_state_at(const Scenario& sc, const std::array<double, 2>& detunings);

struct LinearizedCoupling {
  double re = 0.0;   // 2 g0 Re(alpha)
  double im = 0.0;   // 2 g0 Im(alpha)
};

/// Linearized optomechanical couplings per Side.
std::array<LinearizedCoupling, 2> linearized_couplings(const Scenario& sc, const SteadyState& ss);

/// Time-domain mean-field equations integrated with fixed-step RK4 from zero fields.
/// Only used to verify the closed form.
SteadyState integrate_mean_fields(const Scenario& sc, double duration, int steps);

}  // namespace spinent
