#pragma once

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

#include "spinent/model.hpp"
#include "spinent/steady_state.hpp"

namespace spinent {

using Matrix8d = Eigen::Matrix<double, 8, 8>;

/// Fixed quadrature ordering of the fluctuation vector u.
enum Quadrature : int { X_l = 0, Y_l, X_r, Y_r, q_l, p_l, q_r, p_r };

inline constexpr std::array<std::string_view, 8> quadrature_labels = {
    "X_l", "Y_l", "X_r", "Y_r", "q_l", "p_l", "q_r", "p_r"};

inline constexpr int optical_block(Side s) { return s == Side::left ? X_l : X_r; }
inline constexpr int mechanical_block(Side s) { return s == Side::left ? q_l : q_r; }

struct StabilityReport {
  bool stable = false;
  double margin = 0.0;  // max Re(eig(A)), rad/s
};

/// Drift matrix A, diffusion matrix D and the stability verdict of A.
struct LinearSystem {
  Matrix8d drift;
  Matrix8d diffusion;
  StabilityReport stability;
};

/// Drift matrix of the linearized quadrature dynamics du/dt = A u + v.
Matrix8d drift_matrix(const Scenario& sc, const SteadyState& ss);

/// Diffusion matrix: zero-temperature optical baths, thermal mechanical baths. Diagonal
/// unless sc.correlated_cascade_noise, which adds the fiber-noise cross block
/// D(second, first) = (J/2) R(phi), J = sqrt(eta_f kappa_ex,first kappa_ex,second).
Matrix8d diffusion_matrix(const Scenario& sc);

/// Eigenvalue stability test. Throws NumericalError if the eigen solver fails.
StabilityReport stability(const Eigen::MatrixXd& a);

LinearSystem assemble(const Scenario& sc, const SteadyState& ss);

}  // namespace spinent
