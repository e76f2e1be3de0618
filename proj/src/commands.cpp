#include "spinent/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <ios>
#include <limits>
#include <numbers>
#include <ostream>

#include "spinent/errors.hpp"
#include "spinent/gaussian.hpp"
#include "spinent/presets.hpp"
#include "spinent/scenario.hpp"

namespace spinent {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// Quadratures of the reduced mechanical state and the six projection planes.
constexpr std::array<const char*, 4> mech_labels = {"q_l", "p_l", "q_r", "p_r"};
constexpr std::array<std::pair<int, int>, 6> projection_pairs = {
    std::pair{0, 1}, std::pair{2, 3}, std::pair{0, 2}, std::pair{0, 3}, std::pair{1, 2}, std::pair{1, 3}};

ordered_json provenance(const RunConfig& cfg, const std::string& file) {
  ordered_json p;
  p["tool"] = "spinent";
  p["version"] = version();
  p["file"] = file;
  p["config"] = emit_config(cfg);
  return p;
}

void add_json(OutputBatch& out, const RunConfig& cfg, const std::string& name, ordered_json doc) {
  doc["provenance"] = provenance(cfg, name);
  out.add(name, to_json_text(doc));
}

void add_table(OutputBatch& out, const RunConfig& cfg, const std::string& name, const CsvTable& table,
               ordered_json summary = nullptr) {
  out.add(name, to_csv(table));
  ordered_json p = provenance(cfg, name);
  p["columns"] = table.header;
  if (!summary.is_null()) p["summary"] = std::move(summary);
  out.add(name + ".provenance.json", to_json_text(p));
}

template <class M>
ordered_json matrix_json(const M& m, const std::vector<std::string>& labels) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return {{"labels", labels}, {"rows", std::move(rows)}};
}

std::vector<std::string> full_labels() { return {quadrature_labels.begin(), quadrature_labels.end()}; }
std::vector<std::string> mechanical_labels() { return {mech_labels.begin(), mech_labels.end()}; }

Eigen::Matrix4d mechanical_cm(const ScenarioResult& r) {
  CovarianceMatrix full{Eigen::MatrixXd(*r.covariance), full_labels()};
  return reduce_cm(full, Mode::mechanical_left, Mode::mechanical_right).matrix;
}

ordered_json result_json(const ScenarioResult& r, bool dump) {
  ordered_json j;
  j["status"] = r.stable ? "stable" : "unstable";
  j["direction"] = to_string(r.scenario.drive.direction);
  j["margin"] = r.margin;
  j["N_l"] = r.photons[0];
  j["N_r"] = r.photons[1];
  j["nu_minus"] = r.nu_minus ? ordered_json(*r.nu_minus) : ordered_json(nullptr);
  j["EN"] = r.log_negativity ? ordered_json(*r.log_negativity) : ordered_json(nullptr);
  if (r.relative_residual) j["relative_residual"] = *r.relative_residual;
  if (r.min_symplectic) {
    j["min_symplectic_eigenvalue"] = *r.min_symplectic;
    j["physical"] = r.physical;
  }
  if (r.warning) j["warning"] = *r.warning;
  if (dump) {
    ordered_json m;
    if (r.drift) m["drift"] = matrix_json(*r.drift, full_labels());
    if (r.diffusion) m["diffusion"] = matrix_json(*r.diffusion, full_labels());
    if (r.covariance) m["covariance"] = matrix_json(*r.covariance, full_labels());
    j["matrices"] = std::move(m);
  }
  return j;
}

std::vector<double> as_doubles(const std::vector<bool>& v) {
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] ? 1.0 : 0.0;
  return out;
}

// ---- point / pair / sweep / revival --------------------------------------------------

int point(const RunConfig& cfg, OutputBatch& out) {
  const ScenarioResult r = run_scenario(cfg.scenario, {cfg.dump_matrices});
  add_json(out, cfg, "point.json", result_json(r, cfg.dump_matrices));
  return r.stable ? exit_ok : exit_unstable;
}

int pair(const RunConfig& cfg, OutputBatch& out) {
  const DirectionalPair p = directional_pair(cfg.scenario, {cfg.dump_matrices});
  ordered_json doc;
  doc["left"] = result_json(p.left, cfg.dump_matrices);
  doc["right"] = result_json(p.right, cfg.dump_matrices);
  doc["delta_EN"] = p.delta_log_negativity ? ordered_json(*p.delta_log_negativity) : ordered_json(nullptr);
  add_json(out, cfg, "pair.json", std::move(doc));
  return p.left.stable && p.right.stable ? exit_ok : exit_unstable;
}

CsvTable sweep_csv(const SweepTable& t) {
  CsvTable csv;
  for (std::size_t a = 0; a < t.axes.size(); ++a) csv.add_column(t.axes[a].parameter, t.coordinates[a]);
  csv.add_column("stable", as_doubles(t.stable));
  csv.add_column("physical", as_doubles(t.physical));
  csv.add_column("margin", t.margin);
  csv.add_column("N_l", t.photons_left);
  csv.add_column("N_r", t.photons_right);
  csv.add_column("nu_minus", t.nu_minus);
  csv.add_column("EN", t.log_negativity);
  return csv;
}

int sweep_command(const RunConfig& cfg, OutputBatch& out) {
  const SweepTable t = sweep(cfg.scenario, cfg.axes, {cfg.threads});
  add_table(out, cfg, "sweep.csv", sweep_csv(t), {{"max_EN", t.max_log_negativity()}});
  return exit_ok;
}

int revival(const RunConfig& cfg, OutputBatch& out) {
  const AxisSpec& axis = cfg.axes.front();
  const AxisSpec& base_axis = cfg.baseline_axis ? *cfg.baseline_axis : axis;
  const Scenario base = cfg.baseline ? *cfg.baseline : static_matched(cfg.scenario);
  const RevivalResult r = revival_coefficient(cfg.scenario, axis, base, base_axis, {cfg.threads});
  ordered_json doc;
  doc["numerator_max_EN"] = r.numerator_max;
  doc["baseline_max_EN"] = r.denominator_max;
  doc["eta_rev"] = r.ratio;
  doc["baseline_scenario"] = emit_scenario(base);
  add_json(out, cfg, "revival.json", std::move(doc));
  return exit_ok;
}

// ---- Wigner projections --------------------------------------------------------------

std::string pair_stem(std::pair<int, int> p) {
  return std::string(mech_labels[static_cast<std::size_t>(p.first)]) + "-" +
         mech_labels[static_cast<std::size_t>(p.second)];
}

Eigen::Matrix2d marginal(const Eigen::Matrix4d& v, std::pair<int, int> p) {
  Eigen::Matrix2d m;
  m << v(p.first, p.first), v(p.first, p.second), v(p.second, p.first), v(p.second, p.second);
  return m;
}

ordered_json ellipse_json(const WignerProjection& w) {
  ordered_json j;
  j["marginal"] = matrix_json(w.marginal, {mech_labels[static_cast<std::size_t>(w.pair.first)],
                                           mech_labels[static_cast<std::size_t>(w.pair.second)]});
  j["semi_major"] = w.ellipse.semi_major;
  j["semi_minor"] = w.ellipse.semi_minor;
  j["angle"] = w.ellipse.angle;
  j["vacuum_radius"] = w.vacuum_radius;
  j["below_vacuum"] = w.ellipse.semi_minor < w.vacuum_radius;
  return j;
}

std::vector<double> vacuum_values(const WignerProjection& w) {
  std::vector<double> v(w.values.size());
  for (std::size_t iy = 0; iy < w.y.size(); ++iy)
    for (std::size_t ix = 0; ix < w.x.size(); ++ix)
      v[iy * w.x.size() + ix] = std::exp(-(w.x[ix] * w.x[ix] + w.y[iy] * w.y[iy])) / std::numbers::pi;
  return v;
}

void grid_columns(CsvTable& csv, const WignerProjection& w) {
  std::vector<double> xs, ys;
  xs.reserve(w.values.size());
  ys.reserve(w.values.size());
  for (std::size_t iy = 0; iy < w.y.size(); ++iy)
    for (std::size_t ix = 0; ix < w.x.size(); ++ix) {
      xs.push_back(w.x[ix]);
      ys.push_back(w.y[iy]);
    }
  csv.add_column("x", std::move(xs));
  csv.add_column("y", std::move(ys));
}

ordered_json state_json(const ScenarioResult& r, const Eigen::Matrix4d* v) {
  ordered_json j = result_json(r, false);
  if (v) {
    const Eigen::Matrix4d& m = *v;
    double offdiag = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a != b) offdiag = std::max(offdiag, std::abs(m(a, b)));
    j["covariance"] = matrix_json(m, mechanical_labels());
    j["symmetry"] = {{"abs_V13_minus_V24", std::abs(m(0, 2) - m(1, 3))},
                     {"abs_V14_plus_V23", std::abs(m(0, 3) + m(1, 2))},
                     {"max_abs_offdiag", offdiag}};
  }
  return j;
}

int wigner(const RunConfig& cfg, OutputBatch& out) {
  const ScenarioResult r = run_scenario(cfg.scenario, {true});
  if (!r.stable) {
    add_json(out, cfg, "wigner.json", state_json(r, nullptr));
    return exit_unstable;
  }
  const Eigen::Matrix4d v = mechanical_cm(r);
  ordered_json doc = state_json(r, &v);
  doc["projections"] = ordered_json::array();
  for (const auto& p : projection_pairs) {
    const WignerProjection w = wigner_projection(v, p, cfg.grid);
    const std::string stem = "wigner_" + pair_stem(p);
    CsvTable csv;
    grid_columns(csv, w);
    csv.add_column("W", w.values);
    csv.add_column("W_vacuum", vacuum_values(w));
    add_table(out, cfg, stem + ".csv", csv);
    ordered_json e = ellipse_json(w);
    doc["projections"].push_back({{"pair", pair_stem(p)}, {"ellipse", e}});
    add_json(out, cfg, stem + ".ellipse.json", std::move(e));
  }
  add_json(out, cfg, "wigner.json", std::move(doc));
  return exit_ok;
}

// ---- figure presets ------------------------------------------------------------------

FigurePreset resolve_preset(const RunConfig& cfg) {
  FigurePreset p = figure_preset(*cfg.figure);
  p.scenario = cfg.scenario;
  if (!cfg.axes.empty()) p.axes = cfg.axes;
  if (cfg.baseline_axis) p.baseline_axis = *cfg.baseline_axis;
  if (cfg.resolution) p = with_resolution(std::move(p), *cfg.resolution);
  return p;
}

Scenario with_direction(Scenario sc, Direction d) {
  sc.drive.direction = d;
  return sc;
}

int detuning_pair(const RunConfig& cfg, const FigurePreset& p, OutputBatch& out) {
  const SweepTable l = sweep(with_direction(p.scenario, Direction::left), p.axes, {cfg.threads});
  const SweepTable r = sweep(with_direction(p.scenario, Direction::right), p.axes, {cfg.threads});
  CsvTable csv;
  for (std::size_t a = 0; a < p.axes.size(); ++a) csv.add_column(p.axes[a].parameter, l.coordinates[a]);
  csv.add_column("EN_left", l.log_negativity);
  csv.add_column("EN_right", r.log_negativity);
  add_table(out, cfg, p.name + ".csv", csv,
            {{"max_EN_left", l.max_log_negativity()}, {"max_EN_right", r.max_log_negativity()}});
  return exit_ok;
}

int mismatch_pair(const RunConfig& cfg, const FigurePreset& p, OutputBatch& out) {
  std::vector<AxisSpec> axes = {AxisSpec{"chi", p.chi_values, "1"}};
  axes.insert(axes.end(), p.axes.begin(), p.axes.end());
  const SweepTable l = sweep(with_direction(p.scenario, Direction::left), axes, {cfg.threads});
  const SweepTable r = sweep(with_direction(p.scenario, Direction::right), axes, {cfg.threads});
  CsvTable csv;
  for (std::size_t a = 1; a < axes.size(); ++a) csv.add_column(axes[a].parameter, l.coordinates[a]);
  csv.add_column("chi", l.coordinates[0]);
  csv.add_column("EN_left", l.log_negativity);
  csv.add_column("EN_right", r.log_negativity);

  ordered_json peaks = ordered_json::array();
  const std::size_t per_chi = l.rows() / p.chi_values.size();
  for (std::size_t k = 0; k < p.chi_values.size(); ++k) {
    double best_l = 0.0, best_r = 0.0;
    for (std::size_t row = k * per_chi; row < (k + 1) * per_chi; ++row) {
      if (l.stable[row]) best_l = std::max(best_l, l.log_negativity[row]);
      if (r.stable[row]) best_r = std::max(best_r, r.log_negativity[row]);
    }
    peaks.push_back({{"chi", p.chi_values[k]}, {"max_EN_left", best_l}, {"max_EN_right", best_r}});
  }
  add_table(out, cfg, p.name + ".csv", csv, {{"peaks", std::move(peaks)}});
  return exit_ok;
}

int revival_figure(const RunConfig& cfg, const FigurePreset& p, OutputBatch& out) {
  const Scenario base = cfg.baseline ? *cfg.baseline : static_matched(p.scenario);
  const double baseline_max = sweep(base, {p.baseline_axis}, {cfg.threads}).max_log_negativity();
  if (!(baseline_max > 1e-12)) throw NumericalError("revival: baseline configuration never entangles (max E_N <= 1e-12)");
  const SweepTable t = sweep(p.scenario, p.axes, {cfg.threads});

  CsvTable csv;
  for (std::size_t a = 0; a < p.axes.size(); ++a) csv.add_column(p.axes[a].parameter, t.coordinates[a]);
  std::vector<double> ratio(t.rows(), nan);
  double best = 0.0;
  for (std::size_t row = 0; row < t.rows(); ++row)
    if (t.stable[row]) {
      ratio[row] = t.log_negativity[row] / baseline_max;
      best = std::max(best, ratio[row]);
    }
  csv.add_column("EN", t.log_negativity);
  csv.add_column("eta_rev", ratio);
  add_table(out, cfg, p.name + ".csv", csv,
            {{"baseline_max_EN", baseline_max}, {"max_eta_rev", best}, {"baseline_scenario", emit_scenario(base)}});
  return exit_ok;
}

int wigner_figure(const RunConfig& cfg, const FigurePreset& p, OutputBatch& out) {
  const ScenarioResult l = run_scenario(with_direction(p.scenario, Direction::left), {true});
  const ScenarioResult r = run_scenario(with_direction(p.scenario, Direction::right), {true});
  if (!l.stable || !r.stable) {
    add_json(out, cfg, p.name + ".json",
             {{"left", state_json(l, nullptr)}, {"right", state_json(r, nullptr)}});
    return exit_unstable;
  }
  const Eigen::Matrix4d vl = mechanical_cm(l);
  const Eigen::Matrix4d vr = mechanical_cm(r);

  ordered_json doc;
  doc["left"] = state_json(l, &vl);
  doc["right"] = state_json(r, &vr);
  doc["projections"] = ordered_json::array();
  for (const auto& pr : projection_pairs) {
    // Both directions share one grid so the columns line up.
    GridSpec grid = cfg.grid;
    if (!(grid.half_width > 0.0))
      grid.half_width = std::max(default_half_width(marginal(vl, pr)), default_half_width(marginal(vr, pr)));
    const WignerProjection wl = wigner_projection(vl, pr, grid);
    const WignerProjection wr = wigner_projection(vr, pr, grid);
    const std::string stem = p.name + "_" + pair_stem(pr);
    CsvTable csv;
    grid_columns(csv, wl);
    csv.add_column("W_left", wl.values);
    csv.add_column("W_right", wr.values);
    csv.add_column("W_vacuum", vacuum_values(wl));
    add_table(out, cfg, stem + ".csv", csv);
    ordered_json e = {{"pair", pair_stem(pr)}, {"left", ellipse_json(wl)}, {"right", ellipse_json(wr)}};
    doc["projections"].push_back(e);
    add_json(out, cfg, stem + ".ellipse.json", std::move(e));
  }
  add_json(out, cfg, p.name + ".json", std::move(doc));
  return exit_ok;
}

int figure(const RunConfig& cfg, OutputBatch& out) {
  const FigurePreset p = resolve_preset(cfg);
  switch (p.kind) {
    case FigureKind::detuning_pair: return detuning_pair(cfg, p, out);
    case FigureKind::mismatch_pair: return mismatch_pair(cfg, p, out);
    case FigureKind::revival_map: return revival_figure(cfg, p, out);
    case FigureKind::wigner: return wigner_figure(cfg, p, out);
  }
  return exit_ok;
}

}  // namespace

CommandOutput produce(const RunConfig& cfg) {
  CommandOutput out;
  switch (cfg.command) {
    case Command::point: out.status = point(cfg, out.files); break;
    case Command::pair: out.status = pair(cfg, out.files); break;
    case Command::sweep: out.status = sweep_command(cfg, out.files); break;
    case Command::revival: out.status = revival(cfg, out.files); break;
    case Command::wigner: out.status = wigner(cfg, out.files); break;
    case Command::figure: out.status = figure(cfg, out.files); break;
  }
  return out;
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const UnstableDynamicsError& e) {
    err << "unstable dynamics: " << e.what() << '\n';
    return exit_unstable;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_io;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return exit_io;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_numerical;
  }
}

int run(const RunConfig& cfg, std::ostream& err) {
  try {
    const CommandOutput out = produce(cfg);
    out.files.commit(cfg.out_dir);
    return out.status;
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
}

}  // namespace spinent
