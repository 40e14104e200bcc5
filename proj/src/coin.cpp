#include "qwalk/coin.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

CoinParameter::CoinParameter(double p) : p_(p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidParameter("coin parameter p must lie in (0,1), got " + std::to_string(p));
  }
  sqrt_p_ = std::sqrt(p_);
  sqrt_q_ = std::sqrt(1.0 - p_);
}

Wavenumber::Wavenumber(double value) : value_(value) {
  if (!(value >= -kPi && value < kPi)) {
    throw InvalidParameter("wavenumber must lie in [-pi, pi), got " + std::to_string(value));
  }
}

Wavenumber Wavenumber::wrapped(double value) {
  if (!std::isfinite(value)) throw InvalidParameter("wavenumber must be finite");
  double w = std::remainder(value, 2.0 * kPi);  // [-pi, pi]
  if (w >= kPi) w -= 2.0 * kPi;
  return Wavenumber(w);
}

Matrix2C coin_1d(const CoinParameter& p) {
  Matrix2C h;
  h << p.sqrt_p(), p.sqrt_q(),
       p.sqrt_q(), -p.sqrt_p();
  return h;
}

Matrix4C coin_2d(const CoinParameter& c) {
  const double p = c.p();
  const double q = c.q();
  const double r = std::sqrt(p * q);
  Matrix4C h;
  h << p,  r,  r,  q,
       r, -p,  q, -r,
       r,  q, -p, -r,
       q, -r, -r,  p;
  return h;
}

Matrix2C kernel_1d(const CoinParameter& p, Wavenumber k) {
  const Complex back = std::polar(1.0, -k.value());
  const Complex fwd = std::conj(back);
  Matrix2C s = coin_1d(p);
  s.row(0) *= back;
  s.row(1) *= fwd;
  return s;
}

Matrix2C kernel_1d_derivative(const CoinParameter& p, Wavenumber k) {
  const Complex back = std::polar(1.0, -k.value());
  Matrix2C d = coin_1d(p);
  d.row(0) *= -kI * back;
  d.row(1) *= kI * std::conj(back);
  return d;
}

namespace {

Eigen::Vector4cd shift_phases_2d(Wavenumber m, Wavenumber n) {
  const Complex em = std::polar(1.0, -m.value());
  const Complex en = std::polar(1.0, -n.value());
  return {em, std::conj(em), en, std::conj(en)};
}

}  // namespace

Matrix4C kernel_2d(const CoinParameter& p, Wavenumber m, Wavenumber n) {
  return shift_phases_2d(m, n).asDiagonal() * coin_2d(p);
}

Matrix4C kernel_2d_derivative_m(const CoinParameter& p, Wavenumber m, Wavenumber n) {
  Eigen::Vector4cd d = shift_phases_2d(m, n);
  d(0) *= -kI;
  d(1) *= kI;
  d(2) = 0.0;
  d(3) = 0.0;
  return d.asDiagonal() * coin_2d(p);
}

Matrix4C kernel_2d_derivative_n(const CoinParameter& p, Wavenumber m, Wavenumber n) {
  Eigen::Vector4cd d = shift_phases_2d(m, n);
  d(0) = 0.0;
  d(1) = 0.0;
  d(2) *= -kI;
  d(3) *= kI;
  return d.asDiagonal() * coin_2d(p);
}

}  // namespace qwalk
