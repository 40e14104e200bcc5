#pragma once

#include <cmath>

namespace qwalk {

inline QubitState phi_perp_state(double gamma, int sign) {
  const Complex g = std::polar(1.0 / std::sqrt(2.0), gamma);
  return QubitState::normalized(g, g * Complex(0.0, sign));
}

inline QuditState phi_perp_pattern_state_2d(double gamma, int sign) {
  const Complex g = std::polar(0.5, gamma);
  const Complex s(0.0, sign);
  return QuditState::normalized(Spinor4(g, g * s, g * s, -g));
}

template <typename Rng>
QuditState random_phi_perp_state_2d(Rng& rng) {
  // |k_i| = 1/2 and |sum k|^2 = sum |k|^2 = 1, so the fourth phase a must
  // satisfy |s3 + e^{ia}/2| = 1 with s3 the sum of the first three.
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  while (true) {
    Spinor4 k;
    for (int i = 0; i < 3; ++i) k(i) = std::polar(0.5, phase(rng));
    const Complex s3 = k(0) + k(1) + k(2);
    const double r = std::abs(s3);
    if (r < 1e-3) continue;
    const double c = (0.75 - r * r) / r;
    if (std::abs(c) > 1.0) continue;
    k(3) = std::polar(0.5, std::arg(s3) + std::acos(c));
    return QuditState::normalized(k);
  }
}

}  // namespace qwalk
