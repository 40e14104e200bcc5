#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;
using Matrix2C = Eigen::Matrix2cd;
using Matrix4C = Eigen::Matrix4cd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

// Coin bias p in the open interval (0,1). q is always derived as 1-p.
class CoinParameter {
 public:
  explicit CoinParameter(double p);

  double p() const noexcept { return p_; }
  double q() const noexcept { return 1.0 - p_; }
  double sqrt_p() const noexcept { return sqrt_p_; }
  double sqrt_q() const noexcept { return sqrt_q_; }

 private:
  double p_;
  double sqrt_p_;
  double sqrt_q_;
};

// A point of the Brillouin zone [-pi, pi).
class Wavenumber {
 public:
  explicit Wavenumber(double value);
  // Maps any finite real onto [-pi, pi).
  static Wavenumber wrapped(double value);

  double value() const noexcept { return value_; }

 private:
  double value_;
};

// [[sqrt p, sqrt q], [sqrt q, -sqrt p]]; the Hadamard matrix at p = 1/2.
Matrix2C coin_1d(const CoinParameter& p);

// The 4x4 coin with entries p, sqrt(pq), q; equal to coin_1d(p) kron coin_1d(p).
Matrix4C coin_2d(const CoinParameter& p);

// Fourier-space one-step operator of the line walk:
//   S(k) = diag(e^{-ik}, e^{ik}) * coin_1d(p).
// Component 1 moves to x+1, component 2 to x-1 (position-space difference
// equations).
Matrix2C kernel_1d(const CoinParameter& p, Wavenumber k);
// dS/dk.
Matrix2C kernel_1d_derivative(const CoinParameter& p, Wavenumber k);

// S2(m, n) = diag(e^{-im}, e^{im}, e^{-in}, e^{in}) * coin_2d(p).
// Components (1,2,3,4) move along (+x, -x, +y, -y).
Matrix4C kernel_2d(const CoinParameter& p, Wavenumber m, Wavenumber n);
Matrix4C kernel_2d_derivative_m(const CoinParameter& p, Wavenumber m, Wavenumber n);
Matrix4C kernel_2d_derivative_n(const CoinParameter& p, Wavenumber m, Wavenumber n);

// max_ij |(U^H U - I)_ij|
template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using Mat = typename Derived::PlainObject;
  const Mat gram = u.adjoint() * u;
  return (gram - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace qwalk
