#include "spinent/dynamics.hpp"

#include <cmath>
#include <limits>

#include "spinent/errors.hpp"

namespace spinent {

Matrix8d drift_matrix(const Scenario& sc, const SteadyState& ss) {
  Matrix8d a = Matrix8d::Zero();
  const auto couplings = linearized_couplings(sc, ss);

  for (Side s : {Side::left, Side::right}) {
    const ResonatorParams& res = sc.resonator(s);
    const int o = optical_block(s);
    const int m = mechanical_block(s);
    const double det = ss.detuning[index(s)];
    const auto [re, im] = couplings[index(s)];

    a(o, o) = -res.total_decay() / 2.0;
    a(o, o + 1) = det;
    a(o + 1, o) = -det;
    a(o + 1, o + 1) = -res.total_decay() / 2.0;

    a(o, m) = -im;
    a(o + 1, m) = re;

    a(m, m) = -res.gamma_m / 2.0;
    a(m, m + 1) = res.omega_m;
    a(m + 1, m) = -res.omega_m;
    a(m + 1, m + 1) = -res.gamma_m / 2.0;

    a(m + 1, o) = re;
    a(m + 1, o + 1) = im;
  }

  // Unidirectional fiber link: the second resonator's optical rows see the first's field.
  const ResonatorParams& r1 = sc.resonator(ss.first());
  const ResonatorParams& r2 = sc.resonator(ss.second());
  const double j = std::sqrt(sc.link.transmission * r1.kappa_ex * r2.kappa_ex);
  const double jc = j * std::cos(sc.link.phase);
  const double js = j * std::sin(sc.link.phase);
  const int src = optical_block(ss.first());
  const int dst = optical_block(ss.second());
  a(dst, src) = -jc;
  a(dst, src + 1) = js;
  a(dst + 1, src) = -js;
  a(dst + 1, src + 1) = -jc;
  return a;
}

Matrix8d diffusion_matrix(const Scenario& sc) {
  Matrix8d d = Matrix8d::Zero();
  for (Side s : {Side::left, Side::right}) {
    const ResonatorParams& res = sc.resonator(s);
    const double nbar = thermal_occupancy(res.omega_m, sc.env.temperature);
    const int o = optical_block(s);
    const int m = mechanical_block(s);
    d(o, o) = d(o + 1, o + 1) = res.total_decay() / 2.0;
    d(m, m) = d(m + 1, m + 1) = res.gamma_m * (2.0 * nbar + 1.0) / 2.0;
  }
  if (sc.correlated_cascade_noise) {
    const auto [first, second] = cascade_order(sc.drive.direction);
    const double j = std::sqrt(sc.link.transmission * sc.resonator(first).kappa_ex * sc.resonator(second).kappa_ex);
    const double jc = j * std::cos(sc.link.phase);
    const double js = j * std::sin(sc.link.phase);
    const int f = optical_block(first);
    const int s = optical_block(second);
    Eigen::Matrix2d cross;
    cross << jc, -js, js, jc;
    d.block<2, 2>(s, f) = 0.5 * cross;
    d.block<2, 2>(f, s) = 0.5 * cross.transpose();
  }
  return d;
}

StabilityReport stability(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw NumericalError("stability: matrix is not square");
  if (!a.allFinite()) throw NumericalError("stability: matrix has non-finite entries");
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw NumericalError("stability: eigenvalue computation failed");
  double margin = -std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    margin = std::max(margin, es.eigenvalues()[k].real());
  return {margin < 0.0, margin};
}

LinearSystem assemble(const Scenario& sc, const SteadyState& ss) {
  LinearSystem sys;
  sys.drift = drift_matrix(sc, ss);
  sys.diffusion = diffusion_matrix(sc);
  sys.stability = stability(sys.drift);
  return sys;
}

}  // namespace spinent
