#pragma once

// Reference evolution in wavenumber space: apply the kernel t times at each
// DFT node, then invert. Exact up to rounding while N exceeds the support.

#include <cmath>

#include "qwalk/coin.hpp"
#include "qwalk/walk1d.hpp"
#include "qwalk/walk2d.hpp"

namespace oracle {

using namespace qwalk;

inline double node(int m, int n) { return -kPi + (m + 0.5) * 2.0 * kPi / n; }

// amplitude(x) for x in [-t, t]; index x + t.
inline std::vector<Spinor2> fourier_1d(const QubitState& theta, const CoinParameter& p, double phase, int t) {
  const int n = 2 * t + 2;
  std::vector<Spinor2> hat(n);
  for (int m = 0; m < n; ++m) {
    const Matrix2C s = kernel_1d(p, Wavenumber(node(m, n)));
    Spinor2 v = theta.spinor();
    for (int i = 0; i < t; ++i) v = s * v;
    hat[m] = v;
  }
  std::vector<Spinor2> out(2 * t + 1, Spinor2::Zero());
  const Complex g = std::polar(1.0, phase * t);
  for (int x = -t; x <= t; ++x) {
    Spinor2 acc = Spinor2::Zero();
    for (int m = 0; m < n; ++m) acc += std::polar(1.0, node(m, n) * x) * hat[m];
    out[x + t] = g * acc / static_cast<double>(n);
  }
  return out;
}

// amplitude(x, y) at index (x + t) * (2t + 1) + (y + t).
inline std::vector<Spinor4> fourier_2d(const QuditState& theta, const CoinParameter& p, double phase, int t) {
  const int n = 2 * t + 2;
  const int w = 2 * t + 1;
  std::vector<Spinor4> hat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Matrix4C s = kernel_2d(p, Wavenumber(node(a, n)), Wavenumber(node(b, n)));
      Spinor4 v = theta.spinor();
      for (int i = 0; i < t; ++i) v = s * v;
      hat[a * n + b] = v;
    }
  }
  // Separable inverse: first along n (y), then along m (x).
  std::vector<Spinor4> half(static_cast<std::size_t>(n) * w, Spinor4::Zero());
  for (int a = 0; a < n; ++a) {
    for (int y = -t; y <= t; ++y) {
      Spinor4 acc = Spinor4::Zero();
      for (int b = 0; b < n; ++b) acc += std::polar(1.0, node(b, n) * y) * hat[a * n + b];
      half[a * w + (y + t)] = acc;
    }
  }
  std::vector<Spinor4> out(static_cast<std::size_t>(w) * w, Spinor4::Zero());
  const Complex g = std::polar(1.0, phase * t);
  for (int x = -t; x <= t; ++x) {
    for (int y = -t; y <= t; ++y) {
      Spinor4 acc = Spinor4::Zero();
      for (int a = 0; a < n; ++a) acc += std::polar(1.0, node(a, n) * x) * half[a * w + (y + t)];
      out[(x + t) * w + (y + t)] = g * acc / static_cast<double>(n * n);
    }
  }
  return out;
}

}  // namespace oracle
