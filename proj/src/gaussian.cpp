#include "spinent/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "spinent/dynamics.hpp"
#include "spinent/errors.hpp"

namespace spinent {

namespace {

constexpr double residual_bound = 1e-10;
constexpr double physical_floor = 0.5 - 1e-9;

void check_shapes(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d) {
  if (a.rows() != a.cols() || d.rows() != d.cols() || a.rows() != d.rows() || a.rows() == 0)
    throw NumericalError("lyapunov: A and D must be square and of equal size");
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// Rejects unstable A and flags a margin that is tiny compared to the scale of A.
std::optional<std::string> stability_precheck(const Eigen::MatrixXd& a) {
  const StabilityReport report = stability(a);
  if (!report.stable) throw UnstableDynamicsError(report.margin);
  if (report.margin > -1e-6 * max_abs(a))
    return "ill-conditioned: stability margin " + std::to_string(report.margin) +
           " is within 1e-6 of the drift scale";
  return std::nullopt;
}

LyapunovSolution finish(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d, Eigen::MatrixXd v,
                        std::vector<std::string> modes, std::optional<std::string> warning) {
  v = (0.5 * (v + v.transpose())).eval();
  LyapunovSolution out;
  out.relative_residual = lyapunov_residual(a, v, d);
  if (!(out.relative_residual < residual_bound))
    throw NumericalError("lyapunov: residual " + std::to_string(out.relative_residual) +
                         " exceeds bound");
  out.covariance = {std::move(v), std::move(modes)};
  out.warning = std::move(warning);
  return out;
}

Eigen::MatrixXd kronecker_operator(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  // vec(A V + V A^T) = (I (x) A + A (x) I) vec(V), column-major vec.
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index col = 0; col < n; ++col) {
    k.block(col * n, col * n, n, n) += a;
    for (Eigen::Index row = 0; row < n; ++row)
      k.block(row * n, col * n, n, n).diagonal().array() += a(row, col);
  }
  return k;
}

}  // namespace

double lyapunov_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& v, const Eigen::MatrixXd& d) {
  const double scale = max_abs(d);
  const double r = max_abs(a * v + v * a.transpose() + d);
  return scale > 0.0 ? r / scale : r;
}

LyapunovSolution solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                std::vector<std::string> modes) {
  check_shapes(a, d);
  auto warning = stability_precheck(a);
  const Eigen::Index n = a.rows();

  const Eigen::MatrixXd k = kronecker_operator(a);
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(k);
  const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(d.data(), n * n);
  Eigen::VectorXd x = lu.solve(rhs);
  x += lu.solve(rhs - k * x);  // one step of iterative refinement
  if (!x.allFinite()) throw NumericalError("lyapunov: singular Kronecker system");

  Eigen::MatrixXd v = Eigen::Map<Eigen::MatrixXd>(x.data(), n, n);
  return finish(a, d, std::move(v), std::move(modes), std::move(warning));
}

LyapunovSolution solve_lyapunov_schur(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                      std::vector<std::string> modes) {
  check_shapes(a, d);
  auto warning = stability_precheck(a);
  const Eigen::Index n = a.rows();

  // A = U T U*, so T Y + Y T* = -U* D U with Y = U* V U. Column k of Y couples
  // only to columns j > k through T*, so sweep the columns backwards.
  Eigen::ComplexSchur<Eigen::MatrixXd> schur(a);
  if (schur.info() != Eigen::Success) throw NumericalError("lyapunov: Schur decomposition failed");
  const Eigen::MatrixXcd& t = schur.matrixT();
  const Eigen::MatrixXcd& u = schur.matrixU();
  const Eigen::MatrixXcd c = u.adjoint() * d.cast<std::complex<double>>() * u;

  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    Eigen::VectorXcd rhs = -c.col(k);
    for (Eigen::Index j = k + 1; j < n; ++j) rhs -= std::conj(t(k, j)) * y.col(j);
    Eigen::MatrixXcd shifted = t;
    shifted.diagonal().array() += std::conj(t(k, k));
    y.col(k) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  Eigen::MatrixXd v = (u * y * u.adjoint()).real();
  return finish(a, d, std::move(v), std::move(modes), std::move(warning));
}

const char* to_string(Mode m) {
  switch (m) {
    case Mode::optical_left: return "optical_l";
    case Mode::optical_right: return "optical_r";
    case Mode::mechanical_left: return "mechanical_l";
    case Mode::mechanical_right: return "mechanical_r";
  }
  return "?";
}

CovarianceMatrix reduce_cm(const CovarianceMatrix& v, Mode first, Mode second) {
  const int i = static_cast<int>(first);
  const int j = static_cast<int>(second);
  const int blocks = static_cast<int>(v.size() / 2);
  if (i < 0 || j < 0 || i >= blocks || j >= blocks)
    throw ConfigError("reduce_cm: mode index out of range");
  if (i == j) throw ConfigError("reduce_cm: modes of a bipartition must differ");

  const std::array<int, 4> idx{2 * i, 2 * i + 1, 2 * j, 2 * j + 1};
  CovarianceMatrix out;
  out.matrix.resize(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.matrix(r, c) = v.matrix(idx[r], idx[c]);
  out.modes = {to_string(first), to_string(second)};
  return out;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& v) {
  const Eigen::Index n = v.rows();
  if (n % 2 != 0 || v.cols() != n) throw NumericalError("symplectic eigenvalues need a 2n x 2n matrix");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  // Spectrum of Omega V is {+-i nu_k}.
  Eigen::EigenSolver<Eigen::MatrixXd> es(omega * v, false);
  if (es.info() != Eigen::Success) throw NumericalError("symplectic eigenvalues: eigen solver failed");
  std::vector<double> mags(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) mags[static_cast<std::size_t>(k)] = std::abs(es.eigenvalues()[k]);
  std::sort(mags.begin(), mags.end());
  std::vector<double> out;
  for (std::size_t k = 0; k < mags.size(); k += 2) out.push_back(0.5 * (mags[k] + mags[k + 1]));
  return out;
}

bool physicality_check(const Eigen::MatrixXd& v) {
  const auto nu = symplectic_eigenvalues(v);
  return std::all_of(nu.begin(), nu.end(), [](double x) { return x >= physical_floor; });
}

double symplectic_min_eigenvalue(const Eigen::Matrix4d& v) {
  const double det_a = v.topLeftCorner<2, 2>().determinant();
  const double det_b = v.bottomRightCorner<2, 2>().determinant();
  const double det_c = v.topRightCorner<2, 2>().determinant();
  const double sigma = det_a + det_b - 2.0 * det_c;
  double disc = sigma * sigma - 4.0 * v.determinant();
  if (disc < 0.0) {
    if (disc < -1e-12 * std::max(1.0, sigma * sigma))
      throw NumericalError("symplectic_min_eigenvalue: negative discriminant");
    disc = 0.0;
  }
  const double nu2 = (sigma - std::sqrt(disc)) / 2.0;
  if (!(nu2 > 0.0)) throw NumericalError("symplectic_min_eigenvalue: covariance matrix is not positive definite");
  return std::sqrt(nu2);
}

EntanglementResult log_negativity(const Eigen::Matrix4d& v, std::array<std::string, 2> bipartition) {
  EntanglementResult r;
  r.nu_minus = symplectic_min_eigenvalue(v);
  r.physical = physicality_check(v);
  r.log_negativity = std::max(0.0, -std::log(2.0 * r.nu_minus));
  r.bipartition = std::move(bipartition);
  return r;
}

double wigner_density(const Eigen::MatrixXd& v, const Eigen::VectorXd& psi) {
  if (v.rows() != psi.size() || v.cols() != psi.size() || psi.size() % 2 != 0)
    throw NumericalError("wigner_density: dimension mismatch");
  const double det = v.determinant();
  if (!(det >= 1e-300)) throw NumericalError("wigner_density: singular covariance matrix");
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(v);
  const double quad = psi.dot(ldlt.solve(psi));
  const double modes = static_cast<double>(psi.size()) / 2.0;
  const double norm = std::pow(std::numbers::pi, modes) * std::sqrt((2.0 * v).determinant());
  return std::exp(-0.5 * quad) / norm;
}

Ellipse contour_ellipse(const Eigen::Matrix2d& v2) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(v2);
  if (es.info() != Eigen::Success || !(es.eigenvalues()(0) > 0.0))
    throw NumericalError("contour_ellipse: marginal covariance is not positive definite");
  Ellipse e;
  e.semi_minor = std::sqrt(2.0 * es.eigenvalues()(0));
  e.semi_major = std::sqrt(2.0 * es.eigenvalues()(1));
  const Eigen::Vector2d major = es.eigenvectors().col(1);
  double angle = std::atan2(major(1), major(0));
  if (angle <= -std::numbers::pi / 2) angle += std::numbers::pi;
  if (angle > std::numbers::pi / 2) angle -= std::numbers::pi;
  e.angle = angle;
  return e;
}

double default_half_width(const Eigen::Matrix2d& v2) {
  return 4.0 * std::sqrt(std::max(v2(0, 0), v2(1, 1)));
}

WignerProjection wigner_projection(const Eigen::Matrix4d& v, std::pair<int, int> pair, const GridSpec& grid) {
  const auto [i, j] = pair;
  if (i < 0 || j < 0 || i > 3 || j > 3 || i == j)
    throw ConfigError("wigner_projection: quadrature pair must be two distinct indices in [0, 3]");
  if (grid.points < 2) throw ConfigError("wigner_projection: grid needs at least 2 points per axis");

  WignerProjection p;
  p.pair = pair;
  p.marginal << v(i, i), v(i, j), v(j, i), v(j, j);
  p.ellipse = contour_ellipse(p.marginal);

  const double half = grid.half_width > 0.0 ? grid.half_width : default_half_width(p.marginal);
  const auto n = static_cast<std::size_t>(grid.points);
  p.x.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    p.x[k] = -half + 2.0 * half * static_cast<double>(k) / static_cast<double>(n - 1);
  p.y = p.x;

  p.values.resize(n * n);
  Eigen::VectorXd psi(2);
  const Eigen::MatrixXd marginal = p.marginal;
  for (std::size_t iy = 0; iy < n; ++iy)
    for (std::size_t ix = 0; ix < n; ++ix) {
      psi << p.x[ix], p.y[iy];
      p.values[iy * n + ix] = wigner_density(marginal, psi);
    }
  return p;
}

}  // namespace spinent
