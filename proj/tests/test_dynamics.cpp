#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "spinent/dynamics.hpp"
#include "spinent/errors.hpp"
#include "support.hpp"

using namespace spinent;

namespace {

LinearSystem system_for(const Scenario& sc) { return assemble(sc, solve_steady_state(sc)); }

std::vector<std::complex<double>> sorted_spectrum(const Eigen::MatrixXd& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  std::vector<std::complex<double>> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), [](auto x, auto y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
  return ev;
}

}  // namespace

TEST_CASE("mechanical blocks have the exact damped-oscillator form") {
  Scenario sc = paper_scenario();
  sc.right.omega_m *= 0.95;
  const Matrix8d a = system_for(sc).drift;
  for (Side s : {Side::left, Side::right}) {
    const ResonatorParams& r = sc.resonator(s);
    const int m = mechanical_block(s);
    CHECK(a(m, m) == -r.gamma_m / 2.0);
    CHECK(a(m, m + 1) == r.omega_m);
    CHECK(a(m + 1, m) == -r.omega_m);
    CHECK(a(m + 1, m + 1) == -r.gamma_m / 2.0);
  }
}

TEST_CASE("unidirectional cascade block") {
  Scenario sc = paper_scenario();
  sc.link = {0.7, 0.4};
  for (Direction dir : {Direction::left, Direction::right}) {
    sc.drive.direction = dir;
    const Matrix8d a = system_for(sc).drift;
    const auto [first, second] = cascade_order(dir);
    const int f = optical_block(first);
    const int s = optical_block(second);
    CHECK(a.block<2, 2>(f, s).isZero(0.0));
    const double j = std::sqrt(0.7 * sc.resonator(first).kappa_ex * sc.resonator(second).kappa_ex);
    CHECK(a(s, f) == doctest::Approx(-j * std::cos(0.4)));
    CHECK(a(s, f + 1) == doctest::Approx(j * std::sin(0.4)));
    CHECK(a(s + 1, f) == doctest::Approx(-j * std::sin(0.4)));
    CHECK(a(s + 1, f + 1) == doctest::Approx(-j * std::cos(0.4)));
    // No mechanical cross talk between the resonators.
    CHECK(a.block<2, 2>(mechanical_block(first), mechanical_block(second)).isZero(0.0));
    CHECK(a.block<2, 2>(mechanical_block(second), mechanical_block(first)).isZero(0.0));
  }
}

TEST_CASE("broken link decouples the resonators") {
  Scenario sc = paper_scenario();
  sc.link.transmission = 0.0;
  const Matrix8d a = system_for(sc).drift;
  const int l[] = {X_l, Y_l, q_l, p_l};
  const int r[] = {X_r, Y_r, q_r, p_r};
  for (int i : l)
    for (int k : r) {
      CHECK(a(i, k) == 0.0);
      CHECK(a(k, i) == 0.0);
    }
}

TEST_CASE("quarter-wave fiber phase") {
  Scenario sc = paper_scenario();
  sc.link.phase = std::numbers::pi / 2;
  const Matrix8d a = system_for(sc).drift;
  const double j = std::sqrt(sc.left.kappa_ex * sc.right.kappa_ex);
  CHECK(std::abs(a(X_r, X_l)) < 1e-9 * j);
  CHECK(a(X_r, Y_l) == doctest::Approx(j).epsilon(1e-14));
}

TEST_CASE("no drive: mechanical eigenvalues are exactly -gamma/2 +- i omega_m") {
  Scenario sc = paper_scenario();
  sc.drive.power = 0.0;
  const Matrix8d a = system_for(sc).drift;
  for (Side s : {Side::left, Side::right}) {
    const int m = mechanical_block(s);
    CHECK(a.block<2, 2>(m, optical_block(s)).isZero(0.0));
    CHECK(a.block<2, 2>(optical_block(s), m).isZero(0.0));
    const auto ev = sorted_spectrum(a.block<2, 2>(m, m));
    const ResonatorParams& r = sc.resonator(s);
    CHECK(ev[0].real() == doctest::Approx(-r.gamma_m / 2.0).epsilon(1e-12));
    CHECK(std::abs(ev[0].imag()) == doctest::Approx(r.omega_m).epsilon(1e-12));
  }
}

TEST_CASE("linearized couplings enter as printed") {
  const Scenario sc = paper_scenario();
  const SteadyState ss = solve_steady_state(sc);
  const Matrix8d a = drift_matrix(sc, ss);
  const auto lam = linearized_couplings(sc, ss);
  for (Side s : {Side::left, Side::right}) {
    const int o = optical_block(s), m = mechanical_block(s);
    CHECK(a(o, m) == -lam[index(s)].im);
    CHECK(a(o + 1, m) == lam[index(s)].re);
    CHECK(a(m + 1, o) == lam[index(s)].re);
    CHECK(a(m + 1, o + 1) == lam[index(s)].im);
    CHECK(a(o, m + 1) == 0.0);
    CHECK(a(m, o) == 0.0);
  }
}

TEST_CASE("detuning enters only the four optical rotation entries") {
  const Scenario sc = paper_scenario();
  const SteadyState ss = solve_steady_state(sc);
  const Matrix8d a = drift_matrix(sc, ss);
  const double delta = 1e3;
  for (Side s : {Side::left, Side::right}) {
    SteadyState shifted = ss;
    shifted.detuning[index(s)] += delta;
    const Matrix8d diff = drift_matrix(sc, shifted) - a;
    const int o = optical_block(s);
    CHECK(diff(o, o + 1) == doctest::Approx(delta));
    CHECK(diff(o + 1, o) == doctest::Approx(-delta));
    Matrix8d rest = diff;
    rest(o, o + 1) = rest(o + 1, o) = 0.0;
    CHECK(rest.isZero(0.0));
  }
}

TEST_CASE("right input is the mirror image for identical resonators") {
  Scenario sc = testing::matched_scenario();
  const Matrix8d left = system_for(sc).drift;
  sc.drive.direction = Direction::right;
  const Matrix8d right = system_for(sc).drift;
  Eigen::PermutationMatrix<8> p;
  p.indices() << X_r, Y_r, X_l, Y_l, q_r, p_r, q_l, p_l;
  const Matrix8d mirrored = p * left * p.transpose();
  CHECK((mirrored - right).cwiseAbs().maxCoeff() < 1e-9 * left.cwiseAbs().maxCoeff());
}

TEST_CASE("diffusion matrix") {
  Scenario sc = paper_scenario();
  Matrix8d d = diffusion_matrix(sc);
  const double nbar = thermal_occupancy(sc.left.omega_m, 0.1);
  CHECK(d(X_l, X_l) == sc.left.total_decay() / 2.0);
  CHECK(d(Y_r, Y_r) == sc.right.total_decay() / 2.0);
  CHECK(d(q_l, q_l) == doctest::Approx(sc.left.gamma_m * (2.0 * 23.0 + 1.0) / 2.0).epsilon(0.005));
  CHECK(d(p_l, p_l) == sc.left.gamma_m * (2.0 * nbar + 1.0) / 2.0);
  CHECK(Matrix8d(d.diagonal().asDiagonal()) == d);
  CHECK((d.diagonal().array() >= 0.0).all());

  sc.env.temperature = 0.0;
  d = diffusion_matrix(sc);
  CHECK(d(q_r, q_r) == sc.right.gamma_m / 2.0);
  // Optical entries do not depend on temperature.
  CHECK(d(X_l, X_l) == sc.left.total_decay() / 2.0);
}

TEST_CASE("correlated cascade noise is symmetric, PSD and mirrors the cascade block") {
  Scenario sc = paper_scenario();
  sc.correlated_cascade_noise = true;
  sc.link = {0.6, 1.1};
  for (Direction dir : {Direction::left, Direction::right}) {
    sc.drive.direction = dir;
    const LinearSystem sys = system_for(sc);
    CHECK((sys.diffusion - sys.diffusion.transpose()).isZero(0.0));
    Eigen::SelfAdjointEigenSolver<Matrix8d> es(sys.diffusion);
    CHECK(es.eigenvalues().minCoeff() > -1e-6 * es.eigenvalues().maxCoeff());
    const auto [first, second] = cascade_order(dir);
    const int f = optical_block(first), s = optical_block(second);
    CHECK((sys.diffusion.block<2, 2>(s, f) + 0.5 * sys.drift.block<2, 2>(s, f)).isZero(1e-6));
  }
}

TEST_CASE("diffusion matches a Monte-Carlo estimate of the symmetrized input noise") {
  // Input quadrature noises from the bath correlators: optical vacuum variance 1/2,
  // mechanical thermal variance nbar + 1/2; v_k = sqrt(rate_k) * noise_k.
  const Scenario sc = paper_scenario();
  const Matrix8d d = diffusion_matrix(sc);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  std::array<double, 8> rate{}, variance{};
  for (Side s : {Side::left, Side::right}) {
    const ResonatorParams& r = sc.resonator(s);
    const double nbar = thermal_occupancy(r.omega_m, sc.env.temperature);
    for (int k = 0; k < 2; ++k) {
      rate[optical_block(s) + k] = r.total_decay();
      variance[optical_block(s) + k] = 0.5;
      rate[mechanical_block(s) + k] = r.gamma_m;
      variance[mechanical_block(s) + k] = nbar + 0.5;
    }
  }
  const int samples = 40000;
  Matrix8d acc = Matrix8d::Zero();
  Eigen::Matrix<double, 8, 1> v;
  for (int n = 0; n < samples; ++n) {
    for (int k = 0; k < 8; ++k) v(k) = std::sqrt(rate[k] * variance[k]) * normal(rng);
    acc += v * v.transpose();
  }
  acc /= samples;
  for (int k = 0; k < 8; ++k) {
    CHECK(std::abs(acc(k, k) - d(k, k)) < 0.05 * d(k, k));
    for (int j = 0; j < 8; ++j)
      if (j != k) CHECK(std::abs(acc(k, j)) < 0.05 * std::sqrt(d(k, k) * d(j, j)));
  }
}

TEST_CASE("stability classification") {
  Eigen::MatrixXd a = -Eigen::MatrixXd::Identity(8, 8);
  StabilityReport r = stability(a);
  CHECK(r.stable);
  CHECK(r.margin == doctest::Approx(-1.0));
  a(0, 0) = 1.0;
  r = stability(a);
  CHECK_FALSE(r.stable);
  CHECK(r.margin == doctest::Approx(1.0));
  CHECK_THROWS_AS(stability(Eigen::MatrixXd::Zero(3, 4)), NumericalError);
  a(2, 2) = std::nan("");
  CHECK_THROWS_AS(stability(a), NumericalError);
}

TEST_CASE("paper baseline is stable and fluctuations decay in time") {
  const LinearSystem sys = system_for(paper_scenario());
  CHECK(sys.stability.stable);
  // Propagator from the doubling oracle: exp(A t) for t well beyond 1/|margin|.
  const auto prop = oracle::lyapunov_doubling(sys.drift, sys.diffusion, 1e-12);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  Eigen::VectorXd u0(8);
  for (int k = 0; k < 8; ++k) u0(k) = normal(rng);
  CHECK((prop.phi * u0).norm() < 1e-6 * u0.norm());
}

TEST_CASE("drive phase leaves the spectrum of A unchanged") {
  Scenario sc = paper_scenario();
  sc.spin_left = SpinConfig::from_signed(0.8e6);
  const auto ref = sorted_spectrum(system_for(sc).drift);
  for (double theta : {std::numbers::pi / 4, std::numbers::pi / 2}) {
    sc.drive.phase = theta;
    const LinearSystem sys = system_for(sc);
    const auto ev = sorted_spectrum(sys.drift);
    for (std::size_t k = 0; k < ev.size(); ++k) CHECK(std::abs(ev[k] - ref[k]) < 1e-9 * std::abs(ref[k]));
  }
}

TEST_CASE("assembly is continuous in the scenario fields (property)") {
  Scenario sc = paper_scenario();
  const Matrix8d a0 = system_for(sc).drift;
  for (double h : {1e-3, 1e-6}) {
    Scenario near = sc;
    near.drive.detuning *= 1.0 + h;
    near.link.phase += h;
    near.env.temperature *= 1.0 + h;
    const double change = (system_for(near).drift - a0).cwiseAbs().maxCoeff();
    CHECK(change < 100.0 * h * a0.cwiseAbs().maxCoeff());
  }
}
