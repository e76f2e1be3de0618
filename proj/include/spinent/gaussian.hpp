#pragma once

// Gaussian-state machinery: steady-state covariance from the Lyapunov equation,
// bipartite entanglement (logarithmic negativity), physicality, Wigner projections.
//
// Convention: quadratures X = (a^dag + a)/sqrt(2), so the vacuum covariance is I/2
// and every symplectic eigenvalue of a physical state is >= 1/2.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spinent {

struct CovarianceMatrix {
  Eigen::MatrixXd matrix;
  std::vector<std::string> modes;   // one label per 2x2 block

  Eigen::Index size() const { return matrix.rows(); }
};

struct LyapunovSolution {
  CovarianceMatrix covariance;
  double relative_residual = 0.0;   // max|AV + VA^T + D| / max|D|
  std::optional<std::string> warning;
};

/// Solves A V + V A^T = -D through the vectorized (Kronecker) linear system.
/// Throws UnstableDynamicsError if A has an eigenvalue with Re >= 0 and
/// NumericalError if the residual bound 1e-10 max|D| cannot be reached.
LyapunovSolution solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                std::vector<std::string> modes = {});

/// Bartels-Stewart route through the complex Schur form of A. Same contract.
LyapunovSolution solve_lyapunov_schur(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                      std::vector<std::string> modes = {});

/// Max-abs residual of the Lyapunov equation relative to max|D|.
double lyapunov_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& v, const Eigen::MatrixXd& d);

/// Mode blocks of the 8x8 steady-state covariance, in quadrature order.
enum class Mode { optical_left = 0, optical_right = 1, mechanical_left = 2, mechanical_right = 3 };

const char* to_string(Mode m);

/// Rows/columns of the two 2x2 blocks, in the order given. Throws ConfigError on
/// out-of-range or repeated modes.
CovarianceMatrix reduce_cm(const CovarianceMatrix& v, Mode first, Mode second);

/// Symplectic eigenvalues of an even-dimensional covariance matrix, ascending.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& v);

/// Heisenberg bound: every symplectic eigenvalue >= 1/2 - 1e-9.
bool physicality_check(const Eigen::MatrixXd& v);

/// Smallest symplectic eigenvalue of the partial transpose of a 4x4 two-mode CM.
/// Physicality of the input is not enforced here (log_negativity reports it);
/// throws NumericalError when the formula has no real positive root.
double symplectic_min_eigenvalue(const Eigen::Matrix4d& v);

struct EntanglementResult {
  double nu_minus = 0.0;
  double log_negativity = 0.0;      // max(0, -ln(2 nu_minus))
  bool physical = true;             // V itself obeys the uncertainty bound
  std::array<std::string, 2> bipartition{"mode 1", "mode 2"};
};

EntanglementResult log_negativity(const Eigen::Matrix4d& v,
                                  std::array<std::string, 2> bipartition = {"mode 1", "mode 2"});

/// Normalized Gaussian Wigner function exp(-psi^T V^-1 psi / 2) / (pi^(n/2) sqrt(det 2V)).
/// Throws NumericalError when det V < 1e-300.
double wigner_density(const Eigen::MatrixXd& v, const Eigen::VectorXd& psi);

/// 1/e level set of a 2D Gaussian Wigner function: psi^T V^-1 psi = 2.
struct Ellipse {
  double semi_major = 0.0;
  double semi_minor = 0.0;
  double angle = 0.0;               // major axis w.r.t. the x axis, rad in (-pi/2, pi/2]
};

Ellipse contour_ellipse(const Eigen::Matrix2d& v2);

struct GridSpec {
  int points = 201;
  double half_width = 0.0;          // <= 0 selects 4 sigma of the larger marginal std

  bool operator==(const GridSpec&) const = default;
};

struct WignerProjection {
  std::pair<int, int> pair{0, 1};   // zero-based indices into psi
  Eigen::Matrix2d marginal;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> values;       // values[iy * x.size() + ix]
  Ellipse ellipse;
  double vacuum_radius = 1.0;       // 1/e circle of the vacuum, V2 = I/2

  double at(std::size_t ix, std::size_t iy) const { return values[iy * x.size() + ix]; }
};

/// Marginal of the Wigner function over the quadratures (i, j) of a 4x4 CM.
WignerProjection wigner_projection(const Eigen::Matrix4d& v, std::pair<int, int> pair,
                                   const GridSpec& grid = {});

/// Grid half-width the default GridSpec resolves to for a given marginal.
double default_half_width(const Eigen::Matrix2d& v2);

}  // namespace spinent
