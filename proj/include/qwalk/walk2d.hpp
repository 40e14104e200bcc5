#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/walk1d.hpp"

namespace qwalk {

using Spinor4 = Eigen::Vector4cd;

// Normalized four-component chirality state (k1, k2, k3, k4).
class QuditState {
 public:
  // Throws InvalidState unless sum |k_i|^2 = 1 within 1e-12.
  explicit QuditState(const Spinor4& k);
  QuditState(Complex k1, Complex k2, Complex k3, Complex k4);
  static QuditState normalized(const Spinor4& k);
  // Kronecker product a (x) b, slot order (a1b1, a1b2, a2b1, a2b2).
  static QuditState product(const QubitState& a, const QubitState& b);

  Complex k(int i) const { return spinor_(i); }
  const Spinor4& spinor() const noexcept { return spinor_; }

 private:
  struct Unchecked {};
  QuditState(Unchecked, const Spinor4& s) : spinor_(s) {}
  Spinor4 spinor_;
};

// Amplitudes of the square-lattice walk at time t over the diamond
// |x| + |y| <= t, x + y = t (mod 2). Storage is the dense (t+1) x (t+1)
// block in the rotated coordinates u = (x+y+t)/2, v = (x-y+t)/2, row-major
// in u.
class WaveField2D {
 public:
  WaveField2D(int t, std::vector<Spinor4> block);

  int time() const noexcept { return t_; }
  std::size_t side() const noexcept { return static_cast<std::size_t>(t_) + 1; }
  Spinor4 amplitude(int x, int y) const;
  std::span<const Spinor4> block() const noexcept { return block_; }
  const Spinor4& at(std::size_t u, std::size_t v) const { return block_[u * side() + v]; }
  int site_x(std::size_t u, std::size_t v) const noexcept {
    return static_cast<int>(u + v) - t_;
  }
  int site_y(std::size_t u, std::size_t v) const noexcept {
    return static_cast<int>(u) - static_cast<int>(v);
  }
  double total_probability() const;

 private:
  int t_;
  std::vector<Spinor4> block_;
};

struct SiteMass2D {
  int x;
  int y;
  double probability;
};

// P(x, y, t); zero masses absent; lexicographic (x, then y) order.
struct Distribution2D {
  int t = 0;
  std::vector<SiteMass2D> masses;

  double probability(int x, int y) const;
  double total() const;
};

WaveField2D init_2d(const QuditState& theta);
// One application of the four difference equations: component 1 arrives
// from (x-1,y), 2 from (x+1,y), 3 from (x,y-1), 4 from (x,y+1), each after
// the corresponding row of coin_2d(p) and the phase e^{ik}.
WaveField2D step_2d(const WaveField2D& field, const CoinParameter& p, PhaseParameter k = {});
WaveField2D evolve_2d(const QuditState& theta, const CoinParameter& p, PhaseParameter k, int t);
void evolve_2d_each(const QuditState& theta, const CoinParameter& p, PhaseParameter k, int t_max,
                    const std::function<void(const WaveField2D&)>& visit);

Distribution2D distribution_2d(const WaveField2D& field);
// sum (x/t)^alpha (y/t)^beta P(x,y,t); requires t >= 1 unless alpha = beta = 0.
double joint_moment_2d(const Distribution2D& dist, int alpha, int beta);
// Same sum straight from the field, skipping the Distribution2D.
double joint_moment_2d(const WaveField2D& field, int alpha, int beta);

}  // namespace qwalk
