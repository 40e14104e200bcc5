#pragma once

#include <random>

#include "qwalk/walk1d.hpp"
#include "qwalk/walk2d.hpp"

namespace qwalk {

// Haar-random states from complex Gaussian components.
template <typename Rng>
QubitState random_qubit_state(Rng& rng) {
  std::normal_distribution<double> g;
  while (true) {
    const Complex d1(g(rng), g(rng));
    const Complex d2(g(rng), g(rng));
    if (std::norm(d1) + std::norm(d2) > 1e-6) return QubitState::normalized(d1, d2);
  }
}

template <typename Rng>
QuditState random_qudit_state(Rng& rng) {
  std::normal_distribution<double> g;
  while (true) {
    Spinor4 k;
    for (int i = 0; i < 4; ++i) k(i) = Complex(g(rng), g(rng));
    if (k.squaredNorm() > 1e-6) return QuditState::normalized(k);
  }
}

// e^{i gamma} (1, sign i) / sqrt 2
QubitState phi_perp_state(double gamma, int sign);
// e^{i gamma} (1, sign i, sign i, -1) / 2
QuditState phi_perp_pattern_state_2d(double gamma, int sign);

// A member of the 2D equal-moduli class with vanishing cross sum
// sum_{i != j} k_i conj(k_j), drawn by fixing three random phases and
// solving for the fourth. Components all have modulus 1/2.
template <typename Rng>
QuditState random_phi_perp_state_2d(Rng& rng);

}  // namespace qwalk

#include "qwalk/sampling_impl.hpp"
