#include "qwalk/walk1d.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ipow.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

QubitState::QubitState(Complex d1, Complex d2) : spinor_(d1, d2) {
  const double norm2 = std::norm(d1) + std::norm(d2);
  if (!(std::abs(norm2 - 1.0) <= 1e-12)) {
    throw InvalidState("qubit state must be normalized, |d1|^2+|d2|^2 = " + std::to_string(norm2));
  }
}

QubitState QubitState::normalized(Complex d1, Complex d2) {
  const double norm = std::sqrt(std::norm(d1) + std::norm(d2));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidState("cannot normalize the zero state");
  return QubitState(Unchecked{}, Spinor2(d1 / norm, d2 / norm));
}

WaveField1D::WaveField1D(int t, std::vector<Spinor2> lattice) : t_(t), lattice_(std::move(lattice)) {
  if (t_ < 0 || lattice_.size() != static_cast<std::size_t>(t_) + 1) {
    throw PreconditionError("WaveField1D at time t needs t+1 lattice slots");
  }
}

Spinor2 WaveField1D::amplitude(int x) const {
  const int shifted = x + t_;
  if (shifted < 0 || shifted > 2 * t_ || (shifted & 1)) return Spinor2::Zero();
  return lattice_[static_cast<std::size_t>(shifted / 2)];
}

std::vector<int> WaveField1D::occupied_sites() const {
  std::vector<int> sites;
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    if (lattice_[i](0) != 0.0 || lattice_[i](1) != 0.0) sites.push_back(site(i));
  }
  return sites;
}

double WaveField1D::total_probability() const {
  double s = 0.0;
  for (const auto& a : lattice_) s += a.squaredNorm();
  return s;
}

double Distribution1D::probability(int x) const {
  // masses are sorted by site
  std::size_t lo = 0, hi = masses.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (masses[mid].x < x) lo = mid + 1; else hi = mid;
  }
  return (lo < masses.size() && masses[lo].x == x) ? masses[lo].probability : 0.0;
}

double Distribution1D::total() const {
  double s = 0.0;
  for (const auto& m : masses) s += m.probability;
  return s;
}

WaveField1D init_1d(const QubitState& theta) {
  return WaveField1D(0, {theta.spinor()});
}

WaveField1D step_1d(const WaveField1D& field, const CoinParameter& p, PhaseParameter k) {
  const int t = field.time();
  const auto old = field.lattice();
  const Complex phase = std::polar(1.0, k.k);
  const double sp = p.sqrt_p();
  const double sq = p.sqrt_q();
  std::vector<Spinor2> next(old.size() + 1, Spinor2::Zero());
  // New slot j is site 2j - (t+1): the right mover comes from old slot j-1,
  // the left mover from old slot j.
  for (std::size_t i = 0; i < old.size(); ++i) {
    const Complex a = old[i](0);
    const Complex b = old[i](1);
    next[i + 1](0) = phase * (sp * a + sq * b);
    next[i](1) = phase * (sq * a - sp * b);
  }
  return WaveField1D(t + 1, std::move(next));
}

WaveField1D evolve_1d(const QubitState& theta, const CoinParameter& p, PhaseParameter k, int t) {
  if (t < 0) throw PreconditionError("evolve_1d: t must be nonnegative");
  WaveField1D field = init_1d(theta);
  for (int s = 0; s < t; ++s) field = step_1d(field, p, k);
  return field;
}

void evolve_1d_each(const QubitState& theta, const CoinParameter& p, PhaseParameter k, int t_max,
                    const std::function<void(const WaveField1D&)>& visit) {
  if (t_max < 0) throw PreconditionError("evolve_1d_each: t_max must be nonnegative");
  WaveField1D field = init_1d(theta);
  visit(field);
  for (int s = 0; s < t_max; ++s) {
    field = step_1d(field, p, k);
    visit(field);
  }
}

Distribution1D distribution_1d(const WaveField1D& field) {
  Distribution1D dist;
  dist.t = field.time();
  const auto lat = field.lattice();
  dist.masses.reserve(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const double m = lat[i].squaredNorm();
    if (m > 0.0) dist.masses.push_back({field.site(i), m});
  }
  return dist;
}

double moment_1d(const Distribution1D& dist, int alpha) {
  if (alpha < 0) throw PreconditionError("moment order must be nonnegative");
  if (alpha == 0) return 1.0;
  if (dist.t == 0) return 0.0;
  const double inv_t = 1.0 / dist.t;
  double s = 0.0;
  for (const auto& m : dist.masses) s += detail::ipow(m.x * inv_t, alpha) * m.probability;
  return s;
}

double mean_position_1d(const Distribution1D& dist) {
  double s = 0.0;
  for (const auto& m : dist.masses) s += m.x * m.probability;
  return s;
}

}  // namespace qwalk
