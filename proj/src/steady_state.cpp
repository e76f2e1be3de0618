#include "spinent/steady_state.hpp"

#include <algorithm>
#include <cmath>

#include "spinent/errors.hpp"

namespace spinent {

namespace {

constexpr complex i_unit{0.0, 1.0};
constexpr int max_detuning_iterations = 500;

complex mechanical_response(const ResonatorParams& res, double photons) {
  return i_unit * single_photon_coupling(res) * photons /
         (i_unit * res.omega_m + res.gamma_m / 2.0);
}

}  // namespace

SteadyState steady_state_at(const Scenario& sc, const std::array<double, 2>& detunings) {
  SteadyState ss;
  ss.direction = sc.drive.direction;
  ss.detuning = detunings;

  const auto [first, second] = cascade_order(sc.drive.direction);
  const ResonatorParams& r1 = sc.resonator(first);
  const ResonatorParams& r2 = sc.resonator(second);
  const complex eps = drive_amplitude(sc) * std::polar(1.0, sc.drive.phase);

  const complex a1 = std::sqrt(r1.kappa_ex) * eps /
                     (i_unit * detunings[index(first)] + r1.total_decay() / 2.0);
  const complex fiber_field = eps - std::sqrt(r1.kappa_ex) * a1;
  const complex a2 = std::sqrt(sc.link.transmission * r2.kappa_ex) *
                     std::polar(1.0, sc.link.phase) * fiber_field /
                     (i_unit * detunings[index(second)] + r2.total_decay() / 2.0);

  ss.alpha[index(first)] = a1;
  ss.alpha[index(second)] = a2;
  for (Side s : {Side::left, Side::right})
    ss.beta[index(s)] = mechanical_response(sc.resonator(s), ss.photons(s));
  return ss;
}

SteadyState solve_steady_state(const Scenario& sc) {
  const std::array<double, 2> bare = effective_detunings(sc);
  if (!sc.radiation_pressure_shift) return steady_state_at(sc, bare);

  const double tol = 1e-9 * std::min(sc.left.omega_m, sc.right.omega_m);
  std::array<double, 2> detunings = bare;
  for (int it = 1; it <= max_detuning_iterations; ++it) {
    SteadyState ss = steady_state_at(sc, detunings);
    std::array<double, 2> next{};
    for (Side s : {Side::left, Side::right}) {
      const double shift = single_photon_coupling(sc.resonator(s)) * 2.0 * ss.mechanical(s).real();
      next[index(s)] = bare[index(s)] - shift;
    }
    const double change = std::max(std::abs(next[0] - detunings[0]), std::abs(next[1] - detunings[1]));
    detunings = next;
    if (change < tol) {
      ss = steady_state_at(sc, detunings);
      ss.detuning_iterations = it;
      return ss;
    }
  }
  throw NumericalError("radiation-pressure detuning iteration did not converge");
}

std::array<LinearizedCoupling, 2> linearized_couplings(const Scenario& sc, const SteadyState& ss) {
  std::array<LinearizedCoupling, 2> out{};
  for (Side s : {Side::left, Side::right}) {
    const double g = single_photon_coupling(sc.resonator(s));
    out[index(s)] = {2.0 * g * ss.optical(s).real(), 2.0 * g * ss.optical(s).imag()};
  }
  return out;
}

SteadyState integrate_mean_fields(const Scenario& sc, double duration, int steps) {
  const std::array<double, 2> det = effective_detunings(sc);
  const auto [first, second] = cascade_order(sc.drive.direction);
  const ResonatorParams& r1 = sc.resonator(first);
  const ResonatorParams& r2 = sc.resonator(second);
  const complex eps = drive_amplitude(sc) * std::polar(1.0, sc.drive.phase);
  const complex link = std::sqrt(sc.link.transmission) * std::polar(1.0, sc.link.phase);

  // state: alpha_first, alpha_second, beta_first, beta_second
  using State = std::array<complex, 4>;
  auto rhs = [&](const State& y) {
    State d;
    d[0] = -(i_unit * det[index(first)] + r1.total_decay() / 2.0) * y[0] + std::sqrt(r1.kappa_ex) * eps;
    d[1] = -(i_unit * det[index(second)] + r2.total_decay() / 2.0) * y[1] -
           link * std::sqrt(r1.kappa_ex * r2.kappa_ex) * y[0] + link * std::sqrt(r2.kappa_ex) * eps;
    d[2] = -(i_unit * r1.omega_m + r1.gamma_m / 2.0) * y[2] +
           i_unit * single_photon_coupling(r1) * std::norm(y[0]);
    d[3] = -(i_unit * r2.omega_m + r2.gamma_m / 2.0) * y[3] +
           i_unit * single_photon_coupling(r2) * std::norm(y[1]);
    return d;
  };
  auto axpy = [](const State& y, const State& k, double h) {
    State out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = y[i] + h * k[i];
    return out;
  };

  State y{};
  const double h = duration / steps;
  for (int n = 0; n < steps; ++n) {
    const State k1 = rhs(y);
    const State k2 = rhs(axpy(y, k1, h / 2));
    const State k3 = rhs(axpy(y, k2, h / 2));
    const State k4 = rhs(axpy(y, k3, h));
    for (std::size_t i = 0; i < 4; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }

  SteadyState ss;
  ss.direction = sc.drive.direction;
  ss.detuning = det;
  ss.alpha[index(first)] = y[0];
  ss.alpha[index(second)] = y[1];
  ss.beta[index(first)] = y[2];
  ss.beta[index(second)] = y[3];
  return ss;
}

}  // namespace spinent
