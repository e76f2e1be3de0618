#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "spinent/errors.hpp"
#include "spinent/presets.hpp"
#include "spinent/scenario.hpp"
#include "support.hpp"

using namespace spinent;
using testing::matched_scenario;
using testing::mhz_rad;

namespace {

Scenario at_detuning(Scenario sc, double over_wml) {
  apply_parameter(sc, "delta_over_wml", over_wml);
  return sc;
}

double en(const ScenarioResult& r) {
  REQUIRE(r.stable);
  return *r.log_negativity;
}

}  // namespace

TEST_CASE("run_scenario: zero drive gives a product state") {
  Scenario sc = paper_scenario();
  sc.drive.power = 0.0;
  const ScenarioResult r = run_scenario(sc, {true});
  CHECK(r.stable);
  CHECK(*r.log_negativity == 0.0);
  CHECK(r.photons[0] == 0.0);
  const Matrix8d& v = *r.covariance;
  CHECK(std::abs(v(q_l, q_r)) < 1e-12);
  CHECK(std::abs(v(q_l, p_r)) < 1e-12);
  CHECK(v(X_l, X_l) == doctest::Approx(0.5).epsilon(1e-10));
  const double nbar = thermal_occupancy(sc.left.omega_m, sc.env.temperature);
  CHECK(v(q_l, q_l) == doctest::Approx(nbar + 0.5).epsilon(1e-9));
  // The diagonal noise model alone violates the bound through the optical cascade;
  // the correlated fiber noise restores it.
  CHECK(*r.min_symplectic < 0.5);
  sc.correlated_cascade_noise = true;
  const ScenarioResult c = run_scenario(sc);
  CHECK(c.physical);
  CHECK(*c.min_symplectic == doctest::Approx(0.5).epsilon(1e-9));
  sc.correlated_cascade_noise = false;
  sc.link.transmission = 0.0;
  CHECK(run_scenario(sc).physical);
}

TEST_CASE("run_scenario: entanglement only near resonance") {
  const Scenario sc = matched_scenario();
  CHECK(en(run_scenario(at_detuning(sc, 1.0))) > 0.01);
  CHECK(en(run_scenario(at_detuning(sc, 0.5))) == 0.0);
  CHECK(en(run_scenario(at_detuning(sc, 1.4))) == 0.0);
}

TEST_CASE("run_scenario: unstable points carry no entanglement values") {
  Scenario sc = paper_scenario();
  sc.drive.detuning = -sc.left.omega_m;   // blue-detuned drive heats and destabilizes
  const ScenarioResult r = run_scenario(sc, {true});
  CHECK_FALSE(r.stable);
  CHECK(r.margin > 0.0);
  CHECK_FALSE(r.log_negativity);
  CHECK_FALSE(r.nu_minus);
  CHECK_FALSE(r.covariance);
  CHECK_FALSE(r.physical);
  CHECK(r.drift.has_value());
}

TEST_CASE("directional_pair") {
  SUBCASE("static identical resonators are reciprocal") {
    const DirectionalPair p = directional_pair(matched_scenario());
    CHECK(std::abs(*p.delta_log_negativity) < 1e-3 * *p.left.log_negativity);
  }
  SUBCASE("a single CCW spin breaks reciprocity") {
    Scenario sc = at_detuning(paper_scenario(), 0.74);
    sc.spin_left = SpinConfig::from_signed(0.6 * mhz_rad);
    const DirectionalPair p = directional_pair(sc);
    CHECK(en(p.left) > 0.0);
    CHECK(en(p.right) == 0.0);
    CHECK(*p.delta_log_negativity == *p.left.log_negativity);
  }
  SUBCASE("opposite spins of equal magnitude stay reciprocal") {
    Scenario sc = matched_scenario();
    sc.spin_left = SpinConfig::from_signed(0.6 * mhz_rad);
    sc.spin_right = SpinConfig::from_signed(-0.6 * mhz_rad);
    for (double d : {0.75, 1.0, 1.25}) {
      const DirectionalPair p = directional_pair(at_detuning(sc, d));
      const double scale = std::max(*p.left.log_negativity, *p.right.log_negativity);
      CHECK(std::abs(*p.delta_log_negativity) <= 1e-3 * scale);
    }
  }
  SUBCASE("directions are reported as requested") {
    const DirectionalPair p = directional_pair(paper_scenario());
    CHECK(p.left.scenario.drive.direction == Direction::left);
    CHECK(p.right.scenario.drive.direction == Direction::right);
  }
}

TEST_CASE("apply_parameter and read_parameter") {
  Scenario sc = paper_scenario();
  for (std::string_view name : sweep_parameters) {
    const double before = read_parameter(sc, name);
    const double value = name == "eta_f" ? 0.5 : (before == 0.0 ? 0.25 : before * 0.9);
    Scenario copy = sc;
    apply_parameter(copy, name, value);
    CHECK(read_parameter(copy, name) == doctest::Approx(value).epsilon(1e-14));
  }
  apply_parameter(sc, "chi", 0.95);
  CHECK(sc.right.omega_m == doctest::Approx(0.95 * sc.left.omega_m).epsilon(1e-15));
  CHECK(sc.right.mass == sc.left.mass);
  CHECK(sc.right.gamma_m == sc.left.gamma_m);
  apply_parameter(sc, "omega_r", -0.4 * mhz_rad);
  CHECK(sc.spin_right.orientation == SpinOrientation::cw);
  apply_parameter(sc, "delta_over_wml", 0.68);
  CHECK(sc.drive.detuning == doctest::Approx(0.68 * sc.left.omega_m));
  CHECK_THROWS_AS(apply_parameter(sc, "mass", 1.0), ConfigError);
  CHECK_THROWS_AS(read_parameter(sc, "bogus"), ConfigError);
}

TEST_CASE("sweep: shape, order and consistency with run_scenario") {
  const Scenario sc = paper_scenario();
  const std::vector<AxisSpec> axes = {AxisSpec::linspace("chi", 0.95, 1.0, 3),
                                      AxisSpec::linspace("delta_over_wml", 0.8, 1.2, 5)};
  const SweepTable t = sweep(sc, axes);
  REQUIRE(t.rows() == 15);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    CHECK(t.coordinates[0][r] == axes[0].values[r / 5]);
    CHECK(t.coordinates[1][r] == axes[1].values[r % 5]);
    Scenario point = sc;
    apply_parameter(point, "chi", t.coordinates[0][r]);
    apply_parameter(point, "delta_over_wml", t.coordinates[1][r]);
    const ScenarioResult direct = run_scenario(point);
    CHECK(t.stable[r] == direct.stable);
    CHECK(t.margin[r] == direct.margin);
    CHECK(t.photons_left[r] == direct.photons[0]);
    if (direct.stable) CHECK(t.log_negativity[r] == *direct.log_negativity);
  }
  CHECK(t.max_log_negativity() > 0.0);
}

TEST_CASE("sweep: thread count does not change a single bit") {
  const Scenario sc = paper_scenario();
  const std::vector<AxisSpec> axes = {AxisSpec::linspace("delta_over_wml", -1.2, 1.4, 53)};
  const SweepTable one = sweep(sc, axes, {1});
  const SweepTable four = sweep(sc, axes, {4});
  REQUIRE(one.rows() == four.rows());
  bool any_unstable = false;
  for (std::size_t r = 0; r < one.rows(); ++r) {
    any_unstable |= !one.stable[r];
    CHECK(one.stable[r] == four.stable[r]);
    CHECK(std::memcmp(&one.margin[r], &four.margin[r], sizeof(double)) == 0);
    CHECK(std::memcmp(&one.log_negativity[r], &four.log_negativity[r], sizeof(double)) == 0);
    CHECK(std::memcmp(&one.nu_minus[r], &four.nu_minus[r], sizeof(double)) == 0);
    // flag discipline: no E_N without the stable flag
    CHECK(std::isnan(one.log_negativity[r]) == !one.stable[r]);
  }
  CHECK(any_unstable);
}

TEST_CASE("sweep: degenerate axis equals run_scenario") {
  const Scenario sc = paper_scenario();
  const SweepTable t = sweep(sc, {AxisSpec::linspace("delta_over_wml", 1.0, 1.0, 1)});
  REQUIRE(t.rows() == 1);
  CHECK(t.log_negativity[0] == *run_scenario(sc).log_negativity);
  CHECK_THROWS_AS(sweep(sc, {}), ConfigError);
  const AxisSpec a = AxisSpec::linspace("chi", 1, 2, 2);
  CHECK_THROWS_AS(sweep(sc, {a, a, a}), ConfigError);
}

TEST_CASE("revival coefficient") {
  const Scenario sc = paper_scenario();
  const AxisSpec axis = AxisSpec::linspace("delta_over_wml", 0.6, 1.4, 81);
  const RevivalResult same = revival_coefficient(sc, axis, sc, axis);
  CHECK(same.ratio == 1.0);
  CHECK(same.numerator_max > 0.0);

  Scenario dark = sc;
  dark.drive.power = 0.0;
  CHECK_THROWS_AS(revival_coefficient(sc, axis, dark, axis), NumericalError);

  Scenario spun = sc;
  apply_parameter(spun, "chi", 0.95);
  spun.spin_left = SpinConfig::from_signed(0.8 * mhz_rad);
  const RevivalResult r = revival_coefficient(spun, axis, static_matched(spun), axis);
  CHECK(r.ratio > 0.5);
  CHECK(r.ratio < 1.0);
}

TEST_CASE("static_matched") {
  Scenario sc = paper_scenario();
  apply_parameter(sc, "chi", 0.9);
  sc.spin_left = SpinConfig::from_signed(0.7 * mhz_rad);
  sc.spin_right = SpinConfig::from_signed(-0.2 * mhz_rad);
  const Scenario s = static_matched(sc);
  CHECK(s.right.omega_m == s.left.omega_m);
  CHECK(s.spin_left.signed_rate() == 0.0);
  CHECK(s.spin_right.signed_rate() == 0.0);
  CHECK(s.right.kappa_ex == sc.right.kappa_ex);
  CHECK(s.drive == sc.drive);
}

TEST_CASE("revival map normalizes by the static matched maximum") {
  const Scenario sc = paper_scenario();
  const AxisSpec base = AxisSpec::linspace("delta_over_wml", 0.6, 1.4, 41);
  const RevivalMap m = revival_map(sc, {AxisSpec::linspace("chi", 0.96, 1.0, 3), AxisSpec::linspace("omega_l", 0, 1e6, 3)},
                                   base);
  CHECK(m.baseline_max == sweep(static_matched(sc), {base}).max_log_negativity());
  REQUIRE(m.ratio.size() == 9);
  for (std::size_t r = 0; r < 9; ++r)
    if (m.table.stable[r]) CHECK(m.ratio[r] == m.table.log_negativity[r] / m.baseline_max);
}

TEST_CASE("Fizeau shift equals a detuning offset on a decoupled resonator") {
  Scenario spun = paper_scenario();
  spun.link.transmission = 0.0;
  spun.spin_left = SpinConfig::from_signed(0.3 * mhz_rad);
  Scenario still = spun;
  still.spin_left = SpinConfig::from_signed(0.0);
  const double shift = sagnac_shift(spun.left, spun.spin_left, Direction::left);
  for (double d : {0.7, 0.8, 0.9}) {
    spun.drive.detuning = d * spun.left.omega_m;
    still.drive.detuning = spun.drive.detuning + shift;
    const auto a = run_scenario(spun, {true});
    const auto b = run_scenario(still, {true});
    const Eigen::Matrix2d va = a.covariance->block<2, 2>(q_l, q_l);
    const Eigen::Matrix2d vb = b.covariance->block<2, 2>(q_l, q_l);
    CHECK((va - vb).cwiseAbs().maxCoeff() < 1e-6 * va.cwiseAbs().maxCoeff());
    CHECK(*a.log_negativity == *b.log_negativity);
  }
}
