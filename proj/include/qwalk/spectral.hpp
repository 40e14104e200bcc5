#pragma once

#include <array>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/walk1d.hpp"
#include "qwalk/walk2d.hpp"

namespace qwalk {

// One eigen-branch of the line kernel at a wavenumber.
struct EigenBranch1D {
  Complex eigenvalue;
  Spinor2 eigenvector;
  double weight;    // |<eigenvector, theta>|^2
  double velocity;  // -d(arg eigenvalue)/dk
};

struct EigenBranch2D {
  Complex eigenvalue;
  Spinor4 eigenvector;
  double weight;
  double velocity_x;  // -d(arg eigenvalue)/dm
  double velocity_y;  // -d(arg eigenvalue)/dn
};

// Offset midpoint grid on [-pi, pi): node_m = -pi + (m + 1/2) 2pi/N with N a
// power of two >= 4, so no node falls on 0, +-pi/2 or -pi.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(int nodes);

  int size() const noexcept { return n_; }
  double node(int m) const noexcept { return -kPi + (m + 0.5) * (2.0 * kPi / n_); }
  Wavenumber wavenumber(int m) const { return Wavenumber(node(m)); }

 private:
  int n_;
};

// sigma(k) = arcsin(sqrt p sin k), principal branch.
double sigma(const CoinParameter& p, Wavenumber k);
// d sigma / dk = sqrt p cos k / sqrt(1 - p sin^2 k); |value| <= 1.
double group_velocity(const CoinParameter& p, Wavenumber k);

// Eigenpairs of kernel_1d from the characteristic quadratic
// lambda^2 - 2c lambda - 1 = 0. Branch 0 is e^{-i sigma}, branch 1 is
// -e^{i sigma}. Velocities from the Hellmann-Feynman form
// -Im(h^H S'(k) h / lambda).
std::array<EigenBranch1D, 2> eigensystem_1d(const CoinParameter& p, Wavenumber k, const QubitState& theta);

// Minimum circular separation of eigenphases below which eigensystem_2d
// refuses to resolve branches.
inline constexpr double kMinPhaseSeparation = 1e-8;

// Eigenpairs of kernel_2d by complex Schur decomposition (the kernel is
// normal, so the Schur vectors are orthonormal eigenvectors). Throws
// DegenerateSpectrum when two eigenphases are closer than kMinPhaseSeparation.
std::array<EigenBranch2D, 4> eigensystem_2d(const CoinParameter& p, Wavenumber m, Wavenumber n,
                                            const QuditState& theta);

// Weak-limit moment of the line walk:
//   int dk/2pi sum_j |c_j(k)|^2 v_j(k)^alpha,  alpha >= 1.
double limit_moment_1d(const QubitState& theta, const CoinParameter& p, int alpha, const QuadratureGrid& grid);

// Weak-limit joint moment of the square-lattice walk on the tensor grid:
//   int int dm dn/(2pi)^2 sum_j |c_j|^2 v_{x,j}^alpha v_{y,j}^beta,  alpha+beta >= 1.
double limit_moment_2d(const QuditState& theta, const CoinParameter& p, int alpha, int beta,
                       const QuadratureGrid& grid);
// Several (alpha, beta) orders from one pass over the grid.
std::vector<double> limit_moments_2d(const QuditState& theta, const CoinParameter& p,
                                     const std::vector<std::pair<int, int>>& orders, const QuadratureGrid& grid);

// Simulated pseudo-velocity moments at a ladder of times against the
// quadrature limit.
struct MomentReport {
  int alpha = 0;
  int beta = 0;
  double limit = 0.0;
  std::vector<int> times;
  std::vector<double> simulated;
  std::vector<double> gaps;  // |simulated - limit|

  // gap at the largest time <= gap at the smallest time
  bool converging() const;
};

MomentReport convergence_report_1d(const QubitState& theta, const CoinParameter& p, int alpha,
                                   const std::vector<int>& ladder, const QuadratureGrid& grid);
MomentReport convergence_report_2d(const QuditState& theta, const CoinParameter& p, int alpha, int beta,
                                   const std::vector<int>& ladder, const QuadratureGrid& grid);

}  // namespace qwalk
