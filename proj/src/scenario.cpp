#include "spinent/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "spinent/errors.hpp"
#include "spinent/gaussian.hpp"
#include "spinent/steady_state.hpp"

namespace spinent {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> quadrature_modes() {
  return {to_string(Mode::optical_left), to_string(Mode::optical_right),
          to_string(Mode::mechanical_left), to_string(Mode::mechanical_right)};
}

}  // namespace

ScenarioResult run_scenario(const Scenario& sc, const RunOptions& opts) {
  sc.validate();
  ScenarioResult r;
  r.scenario = sc;

  const SteadyState ss = solve_steady_state(sc);
  r.photons = {ss.photons(Side::left), ss.photons(Side::right)};

  const LinearSystem sys = assemble(sc, ss);
  r.stable = sys.stability.stable;
  r.margin = sys.stability.margin;
  if (opts.keep_matrices) {
    r.drift = sys.drift;
    r.diffusion = sys.diffusion;
  }
  if (!r.stable) return r;

  const LyapunovSolution sol = solve_lyapunov(sys.drift, sys.diffusion, quadrature_modes());
  r.relative_residual = sol.relative_residual;
  r.warning = sol.warning;
  r.min_symplectic = symplectic_eigenvalues(sol.covariance.matrix).front();
  r.physical = physicality_check(sol.covariance.matrix);
  if (!r.physical) {
    const std::string note = "steady-state covariance violates the uncertainty bound (min symplectic eigenvalue " +
                             std::to_string(*r.min_symplectic) + " < 1/2)";
    r.warning = r.warning ? *r.warning + "; " + note : note;
  }
  const CovarianceMatrix mech = reduce_cm(sol.covariance, Mode::mechanical_left, Mode::mechanical_right);
  const EntanglementResult ent = log_negativity(mech.matrix, {mech.modes[0], mech.modes[1]});
  r.nu_minus = ent.nu_minus;
  r.log_negativity = ent.log_negativity;
  if (opts.keep_matrices) r.covariance = Matrix8d(sol.covariance.matrix);
  return r;
}

DirectionalPair directional_pair(const Scenario& sc, const RunOptions& opts) {
  Scenario left = sc;
  left.drive.direction = Direction::left;
  Scenario right = sc;
  right.drive.direction = Direction::right;

  DirectionalPair out{run_scenario(left, opts), run_scenario(right, opts), std::nullopt};
  if (out.left.log_negativity && out.right.log_negativity)
    out.delta_log_negativity = *out.left.log_negativity - *out.right.log_negativity;
  return out;
}

void apply_parameter(Scenario& sc, std::string_view name, double value) {
  if (name == "delta_over_wml") sc.drive.detuning = value * sc.left.omega_m;
  else if (name == "delta") sc.drive.detuning = value;
  else if (name == "omega_l") sc.spin_left = SpinConfig::from_signed(value);
  else if (name == "omega_r") sc.spin_right = SpinConfig::from_signed(value);
  else if (name == "chi") sc.right.omega_m = value * sc.left.omega_m;
  else if (name == "phi") sc.link.phase = value;
  else if (name == "eta_f") sc.link.transmission = value;
  else if (name == "power") sc.drive.power = value;
  else if (name == "temperature") sc.env.temperature = value;
  else if (name == "drive_phase") sc.drive.phase = value;
  else throw ConfigError("axis.parameter: unknown sweep parameter '" + std::string(name) + "'");
}

double read_parameter(const Scenario& sc, std::string_view name) {
  if (name == "delta_over_wml") return sc.drive.detuning / sc.left.omega_m;
  if (name == "delta") return sc.drive.detuning;
  if (name == "omega_l") return sc.spin_left.signed_rate();
  if (name == "omega_r") return sc.spin_right.signed_rate();
  if (name == "chi") return sc.right.omega_m / sc.left.omega_m;
  if (name == "phi") return sc.link.phase;
  if (name == "eta_f") return sc.link.transmission;
  if (name == "power") return sc.drive.power;
  if (name == "temperature") return sc.env.temperature;
  if (name == "drive_phase") return sc.drive.phase;
  throw ConfigError("axis.parameter: unknown sweep parameter '" + std::string(name) + "'");
}

AxisSpec AxisSpec::linspace(std::string parameter, double start, double stop, int points, std::string unit) {
  if (points < 1) throw ConfigError("axis.points: must be >= 1");
  AxisSpec a{std::move(parameter), {}, std::move(unit)};
  a.values.resize(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k)
    a.values[static_cast<std::size_t>(k)] =
        points == 1 ? start : start + (stop - start) * static_cast<double>(k) / (points - 1);
  return a;
}

double SweepTable::max_log_negativity() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows(); ++r)
    if (stable[r]) best = std::max(best, log_negativity[r]);
  return best;
}

SweepTable sweep(const Scenario& sc, const std::vector<AxisSpec>& axes, const SweepOptions& opts) {
  if (axes.empty() || axes.size() > 2) throw ConfigError("axes: a sweep takes one or two axes");
  std::size_t total = 1;
  for (const AxisSpec& ax : axes) {
    if (ax.values.empty()) throw ConfigError("axes." + ax.parameter + ": no values");
    (void)read_parameter(sc, ax.parameter);
    total *= ax.values.size();
  }

  SweepTable t;
  t.axes = axes;
  t.coordinates.assign(axes.size(), std::vector<double>(total));
  t.stable.assign(total, false);
  t.physical.assign(total, false);
  t.margin.assign(total, nan);
  t.photons_left.assign(total, nan);
  t.photons_right.assign(total, nan);
  t.nu_minus.assign(total, nan);
  t.relative_residual.assign(total, nan);
  t.log_negativity.assign(total, nan);

  auto coordinates_of = [&](std::size_t row) {
    std::vector<std::size_t> idx(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
      idx[a] = row % axes[a].values.size();
      row /= axes[a].values.size();
    }
    return idx;
  };

  std::vector<ScenarioResult> results(total);
  auto evaluate = [&](std::size_t row) {
    Scenario point = sc;
    const auto idx = coordinates_of(row);
    for (std::size_t a = 0; a < axes.size(); ++a) apply_parameter(point, axes[a].parameter, axes[a].values[idx[a]]);
    results[row] = run_scenario(point);
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    for (std::size_t row = 0; row < total; ++row) evaluate(row);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
          for (std::size_t row = next++; row < total; row = next++) {
            try {
              evaluate(row);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
              next = total;
            }
          }
        });
    }
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t row = 0; row < total; ++row) {
    const auto idx = coordinates_of(row);
    for (std::size_t a = 0; a < axes.size(); ++a) t.coordinates[a][row] = axes[a].values[idx[a]];
    const ScenarioResult& r = results[row];
    t.stable[row] = r.stable;
    t.physical[row] = r.physical;
    t.margin[row] = r.margin;
    t.photons_left[row] = r.photons[0];
    t.photons_right[row] = r.photons[1];
    if (r.stable) {
      t.nu_minus[row] = *r.nu_minus;
      t.relative_residual[row] = *r.relative_residual;
      t.log_negativity[row] = *r.log_negativity;
    }
  }
  return t;
}

RevivalResult revival_coefficient(const Scenario& numerator, const AxisSpec& numerator_axis,
                                  const Scenario& baseline, const AxisSpec& baseline_axis,
                                  const SweepOptions& opts) {
  RevivalResult r;
  r.numerator_max = sweep(numerator, {numerator_axis}, opts).max_log_negativity();
  r.denominator_max = sweep(baseline, {baseline_axis}, opts).max_log_negativity();
  if (!(r.denominator_max > 1e-12))
    throw NumericalError("revival: baseline configuration never entangles (max E_N <= 1e-12)");
  r.ratio = r.numerator_max / r.denominator_max;
  return r;
}

Scenario static_matched(const Scenario& sc) {
  Scenario out = sc;
  out.spin_left = {};
  out.spin_right = {};
  out.right.omega_m = out.left.omega_m;
  return out;
}

RevivalMap revival_map(const Scenario& sc, const std::vector<AxisSpec>& axes, const AxisSpec& baseline_axis,
                       const SweepOptions& opts) {
  RevivalMap m;
  m.baseline_max = sweep(static_matched(sc), {baseline_axis}, opts).max_log_negativity();
  if (!(m.baseline_max > 1e-12))
    throw NumericalError("revival: baseline configuration never entangles (max E_N <= 1e-12)");
  m.table = sweep(sc, axes, opts);
  m.ratio.resize(m.table.rows());
  for (std::size_t row = 0; row < m.table.rows(); ++row)
    m.ratio[row] = m.table.stable[row] ? m.table.log_negativity[row] / m.baseline_max : nan;
  return m;
}

}  // namespace spinent
