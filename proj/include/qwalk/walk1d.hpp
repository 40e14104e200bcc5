#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

using Spinor2 = Eigen::Vector2cd;

// Normalized two-component chirality state (d1, d2).
class QubitState {
 public:
  // Throws InvalidState unless |d1|^2 + |d2|^2 = 1 within 1e-12.
  QubitState(Complex d1, Complex d2);
  // Rescales (d1, d2) to unit norm; throws InvalidState for the zero vector.
  static QubitState normalized(Complex d1, Complex d2);

  Complex d1() const noexcept { return spinor_(0); }
  Complex d2() const noexcept { return spinor_(1); }
  const Spinor2& spinor() const noexcept { return spinor_; }

 private:
  struct Unchecked {};
  QubitState(Unchecked, Spinor2 s) : spinor_(std::move(s)) {}
  Spinor2 spinor_;
};

// Global phase e^{ik} applied at every step. Distributions do not depend on it.
struct PhaseParameter {
  double k = 0.0;
};

// Amplitudes of the line walk at time t. Only sites x = -t, -t+2, ..., t can
// be occupied, so storage is the (t+1)-point parity sublattice: slot i holds
// site x = 2i - t.
class WaveField1D {
 public:
  WaveField1D(int t, std::vector<Spinor2> lattice);

  int time() const noexcept { return t_; }
  // Zero outside the light cone or on the wrong parity.
  Spinor2 amplitude(int x) const;
  std::span<const Spinor2> lattice() const noexcept { return lattice_; }
  int site(std::size_t slot) const noexcept { return 2 * static_cast<int>(slot) - t_; }
  // Sites carrying a nonzero amplitude, ascending.
  std::vector<int> occupied_sites() const;
  double total_probability() const;

 private:
  int t_;
  std::vector<Spinor2> lattice_;
};

struct SiteMass1D {
  int x;
  double probability;
};

// P(x, t); sites with zero mass are absent; ascending in x.
struct Distribution1D {
  int t = 0;
  std::vector<SiteMass1D> masses;

  double probability(int x) const;
  double total() const;
};

WaveField1D init_1d(const QubitState& theta);
// phi1(x,t) = e^{ik}[sqrt p phi1(x-1,t-1) + sqrt q phi2(x-1,t-1)]
// phi2(x,t) = e^{ik}[sqrt q phi1(x+1,t-1) - sqrt p phi2(x+1,t-1)]
WaveField1D step_1d(const WaveField1D& field, const CoinParameter& p, PhaseParameter k = {});
WaveField1D evolve_1d(const QubitState& theta, const CoinParameter& p, PhaseParameter k, int t);
// Evolves to t_max calling visit(field) at every t = 0..t_max.
void evolve_1d_each(const QubitState& theta, const CoinParameter& p, PhaseParameter k, int t_max,
                    const std::function<void(const WaveField1D&)>& visit);

Distribution1D distribution_1d(const WaveField1D& field);
// Pseudo-velocity moment sum_x (x/t)^alpha P(x,t); at t = 0 returns 1 for
// alpha = 0 and 0 otherwise.
double moment_1d(const Distribution1D& dist, int alpha);
// sum_x x P(x,t)
double mean_position_1d(const Distribution1D& dist);

}  // namespace qwalk
