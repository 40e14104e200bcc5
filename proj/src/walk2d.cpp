#include "qwalk/walk2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "ipow.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

QuditState::QuditState(const Spinor4& k) : spinor_(k) {
  const double norm2 = k.squaredNorm();
  if (!(std::abs(norm2 - 1.0) <= 1e-12)) {
    throw InvalidState("qudit state must be normalized, sum |k_i|^2 = " + std::to_string(norm2));
  }
}

QuditState::QuditState(Complex k1, Complex k2, Complex k3, Complex k4)
    : QuditState(Spinor4(k1, k2, k3, k4)) {}

QuditState QuditState::normalized(const Spinor4& k) {
  const double norm = k.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidState("cannot normalize the zero state");
  return QuditState(Unchecked{}, k / norm);
}

QuditState QuditState::product(const QubitState& a, const QubitState& b) {
  const Spinor4 k(a.d1() * b.d1(), a.d1() * b.d2(), a.d2() * b.d1(), a.d2() * b.d2());
  return QuditState(Unchecked{}, k);
}

WaveField2D::WaveField2D(int t, std::vector<Spinor4> block) : t_(t), block_(std::move(block)) {
  if (t_ < 0 || block_.size() != side() * side()) {
    throw PreconditionError("WaveField2D at time t needs (t+1)^2 block entries");
  }
}

Spinor4 WaveField2D::amplitude(int x, int y) const {
  const int su = x + y + t_;
  const int sv = x - y + t_;
  if (su < 0 || sv < 0 || su > 2 * t_ || sv > 2 * t_ || (su & 1)) return Spinor4::Zero();
  return at(static_cast<std::size_t>(su / 2), static_cast<std::size_t>(sv / 2));
}

double WaveField2D::total_probability() const {
  double s = 0.0;
  for (const auto& a : block_) s += a.squaredNorm();
  return s;
}

double Distribution2D::probability(int x, int y) const {
  const auto it = std::lower_bound(masses.begin(), masses.end(), std::pair{x, y},
                                   [](const SiteMass2D& m, const std::pair<int, int>& key) {
                                     return std::pair{m.x, m.y} < key;
                                   });
  return (it != masses.end() && it->x == x && it->y == y) ? it->probability : 0.0;
}

double Distribution2D::total() const {
  double s = 0.0;
  for (const auto& m : masses) s += m.probability;
  return s;
}

WaveField2D init_2d(const QuditState& theta) {
  return WaveField2D(0, {theta.spinor()});
}

WaveField2D step_2d(const WaveField2D& field, const CoinParameter& p, PhaseParameter k) {
  const std::size_t n_old = field.side();
  const std::size_t n_new = n_old + 1;
  const Complex phase = std::polar(1.0, k.k);
  // Real coin rows, pre-multiplied by the phase.
  const Eigen::Matrix4d coin = coin_2d(p).real();
  Eigen::Matrix4cd coin_phase = coin.cast<Complex>() * phase;
  const auto old = field.block();

  // In (u, v): the +x mover advances (u+1, v+1), the -x mover stays,
  // +y advances u only, -y advances v only.
  std::vector<Spinor4> next(n_new * n_new, Spinor4::Zero());
  parallel_for(0, n_new, [&](std::size_t row_lo, std::size_t row_hi) {
    for (std::size_t u = row_lo; u < row_hi; ++u) {
      for (std::size_t v = 0; v < n_new; ++v) {
        Spinor4& out = next[u * n_new + v];
        if (u >= 1 && v >= 1) out(0) = coin_phase.row(0) * old[(u - 1) * n_old + (v - 1)];
        if (u < n_old && v < n_old) out(1) = coin_phase.row(1) * old[u * n_old + v];
        if (u >= 1 && v < n_old) out(2) = coin_phase.row(2) * old[(u - 1) * n_old + v];
        if (u < n_old && v >= 1) out(3) = coin_phase.row(3) * old[u * n_old + (v - 1)];
      }
    }
  });
  return WaveField2D(field.time() + 1, std::move(next));
}

WaveField2D evolve_2d(const QuditState& theta, const CoinParameter& p, PhaseParameter k, int t) {
  if (t < 0) throw PreconditionError("evolve_2d: t must be nonnegative");
  WaveField2D field = init_2d(theta);
  for (int s = 0; s < t; ++s) field = step_2d(field, p, k);
  return field;
}

void evolve_2d_each(const QuditState& theta, const CoinParameter& p, PhaseParameter k, int t_max,
                    const std::function<void(const WaveField2D&)>& visit) {
  if (t_max < 0) throw PreconditionError("evolve_2d_each: t_max must be nonnegative");
  WaveField2D field = init_2d(theta);
  visit(field);
  for (int s = 0; s < t_max; ++s) {
    field = step_2d(field, p, k);
    visit(field);
  }
}

Distribution2D distribution_2d(const WaveField2D& field) {
  Distribution2D dist;
  dist.t = field.time();
  const std::size_t n = field.side();
  dist.masses.reserve(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const double m = field.at(u, v).squaredNorm();
      if (m > 0.0) dist.masses.push_back({field.site_x(u, v), field.site_y(u, v), m});
    }
  }
  std::sort(dist.masses.begin(), dist.masses.end(), [](const SiteMass2D& a, const SiteMass2D& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return dist;
}

double joint_moment_2d(const Distribution2D& dist, int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw PreconditionError("moment orders must be nonnegative");
  if (alpha == 0 && beta == 0) return 1.0;
  if (dist.t == 0) throw PreconditionError("joint moment of order > 0 requires t >= 1");
  const double inv_t = 1.0 / dist.t;
  double s = 0.0;
  for (const auto& m : dist.masses) {
    s += detail::ipow(m.x * inv_t, alpha) * detail::ipow(m.y * inv_t, beta) * m.probability;
  }
  return s;
}

double joint_moment_2d(const WaveField2D& field, int alpha, int beta) {
  if (alpha < 0 || beta < 0) throw PreconditionError("moment orders must be nonnegative");
  if (alpha == 0 && beta == 0) return 1.0;
  if (field.time() == 0) throw PreconditionError("joint moment of order > 0 requires t >= 1");
  const double inv_t = 1.0 / field.time();
  const std::size_t n = field.side();
  double s = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const double x = field.site_x(u, v) * inv_t;
      const double y = field.site_y(u, v) * inv_t;
      s += detail::ipow(x, alpha) * detail::ipow(y, beta) * field.at(u, v).squaredNorm();
    }
  }
  return s;
}

}  // namespace qwalk
