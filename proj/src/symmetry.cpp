#include "qwalk/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kClassTol = 1e-12;

// The reflected orientation: zeta_x := walk field at -x.
Spinor2 reflected(const WaveField1D& f, int x) { return f.amplitude(-x); }
Spinor4 reflected(const WaveField2D& f, int x, int y) { return f.amplitude(-x, -y); }

// +1 or -1 if v is proportional to pattern(s), otherwise 0.
template <typename Vec, typename Pattern>
int pattern_sign(const Vec& v, Pattern pattern) {
  for (int s : {1, -1}) {
    const Vec w = pattern(s);
    // v = c w for some scalar c iff |<w, v>| = |w| |v|
    const double overlap = std::abs(w.dot(v));
    if (std::abs(overlap - w.norm() * v.norm()) <= 1e-12) return s;
  }
  return 0;
}

}  // namespace

bool in_phi_perp(const QubitState& theta) {
  const Complex d1 = theta.d1();
  const Complex d2 = theta.d2();
  const double cross = 2.0 * std::real(d1 * std::conj(d2));
  return std::abs(std::abs(d1) - std::abs(d2)) <= kClassTol && std::abs(cross) <= kClassTol;
}

bool empirical_symmetric_1d(const QubitState& theta, const CoinParameter& p, int horizon) {
  if (horizon < 1) throw PreconditionError("horizon must be >= 1");
  bool symmetric = true;
  evolve_1d_each(theta, p, {}, horizon, [&](const WaveField1D& f) {
    if (!symmetric || f.time() == 0) return;
    const auto lat = f.lattice();
    const std::size_t n = lat.size();
    // slot i is site 2i - t, slot n-1-i is its mirror
    for (std::size_t i = 0; i < n / 2 + 1 && i < n; ++i) {
      if (std::abs(lat[i].squaredNorm() - lat[n - 1 - i].squaredNorm()) > kClassTol) {
        symmetric = false;
        return;
      }
    }
  });
  return symmetric;
}

std::vector<double> expectation_series(const QubitState& theta, const CoinParameter& p, int horizon) {
  if (horizon < 1) throw PreconditionError("horizon must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(horizon));
  evolve_1d_each(theta, p, {}, horizon, [&](const WaveField1D& f) {
    if (f.time() >= 1) out.push_back(mean_position_1d(distribution_1d(f)));
  });
  return out;
}

SymmetryVerdict1D classify_1d(const QubitState& theta, const CoinParameter& p, int horizon) {
  SymmetryVerdict1D v;
  v.horizon = horizon;
  v.in_phi_perp = in_phi_perp(theta);
  v.empirically_symmetric = empirical_symmetric_1d(theta, p, horizon);
  const auto means = expectation_series(theta, p, horizon);
  v.zero_mean = std::all_of(means.begin(), means.end(), [](double e) { return std::abs(e) <= kClassTol; });
  return v;
}

ABTable extract_ab(const CoinParameter& p, int horizon) {
  const double h = std::numbers::sqrt2 / 2.0;
  return {expectation_series(QubitState(1.0, 0.0), p, horizon), expectation_series(QubitState(h, h), p, horizon)};
}

ABTable reference_ab_table() {
  return {
      {0.0, 0.0, 1.0 / 2, 1.0, 9.0 / 8, 5.0 / 4, 27.0 / 16, 17.0 / 8, 293.0 / 128, 157.0 / 64},
      {1.0, 1.0, 1.0, 3.0 / 2, 2.0, 17.0 / 8, 9.0 / 4, 43.0 / 16, 25.0 / 8, 421.0 / 128},
  };
}

bool kns_check(const ABTable& table) {
  if (table.horizon() < 2 || table.b.size() != table.a.size()) {
    throw PreconditionError("kns_check needs two equally long series of length >= 2");
  }
  for (int t = 1; t < table.horizon(); ++t) {
    if (std::abs(table.b_at(t + 1) - table.a_at(t) - 1.0) > 1e-10) return false;
  }
  return true;
}

double max_table_deviation(const ABTable& lhs, const ABTable& rhs) {
  const std::size_t n = std::min(lhs.a.size(), rhs.a.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max({worst, std::abs(lhs.a[i] - rhs.a[i]), std::abs(lhs.b[i] - rhs.b[i])});
  }
  return worst;
}

Matrix2C exchange_matrix_1d() {
  Matrix2C j;
  j << 0.0, -1.0,
       1.0, 0.0;
  return j;
}

Matrix4C exchange_matrix_2d() {
  Matrix4C j;
  j << 0.0, 0.0, 0.0, 1.0,
       0.0, 0.0, -1.0, 0.0,
       0.0, -1.0, 0.0, 0.0,
       1.0, 0.0, 0.0, 0.0;
  return j;
}

double reflection_identity_1d(const QubitState& theta, const CoinParameter& p, int t) {
  const int s = pattern_sign(theta.spinor(), [](int sign) { return Spinor2(1.0, static_cast<double>(sign) * kI); });
  if (s == 0) throw PreconditionError("reflection_identity_1d needs a state proportional to (1, +-i)");
  if (t < 0) throw PreconditionError("t must be nonnegative");
  const WaveField1D f = evolve_1d(theta, p, {}, t);
  const Complex factor = (t % 2 == 0 ? 1.0 : -1.0) * (static_cast<double>(s) * kI);
  const Matrix2C j = exchange_matrix_1d();
  double worst = 0.0;
  for (int x = -t; x <= t; x += 2) {
    const Spinor2 diff = reflected(f, x) - factor * (j * reflected(f, -x));
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return worst;
}

bool in_phi_perp_2d(const QuditState& theta) {
  const Spinor4& k = theta.spinor();
  const double m0 = std::abs(k(0));
  for (int i = 1; i < 4; ++i) {
    if (std::abs(std::abs(k(i)) - m0) > kClassTol) return false;
  }
  // sum_{i != j} k_i conj(k_j) = |sum k|^2 - sum |k|^2; computed term-wise
  Complex cross = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) cross += k(i) * std::conj(k(j));
    }
  }
  return std::abs(cross) <= kClassTol;
}

bool empirical_symmetric_2d(const QuditState& theta, const CoinParameter& p, int horizon) {
  if (horizon < 1) throw PreconditionError("horizon must be >= 1");
  bool symmetric = true;
  evolve_2d_each(theta, p, {}, horizon, [&](const WaveField2D& f) {
    if (!symmetric || f.time() == 0) return;
    const int t = f.time();
    for (int x = -t; x <= t && symmetric; ++x) {
      const int span = t - std::abs(x);
      for (int y = -span; y <= span; y += 2) {
        const double m = f.amplitude(x, y).squaredNorm();
        if (std::abs(m - f.amplitude(-x, y).squaredNorm()) > kClassTol ||
            std::abs(m - f.amplitude(x, -y).squaredNorm()) > kClassTol ||
            std::abs(m - f.amplitude(-x, -y).squaredNorm()) > kClassTol) {
          symmetric = false;
          break;
        }
      }
    }
  });
  return symmetric;
}

double reflection_identity_2d(const QuditState& theta, const CoinParameter& p, int t) {
  const int s = pattern_sign(theta.spinor(), [](int sign) { return Spinor4(1.0, static_cast<double>(sign) * kI, static_cast<double>(sign) * kI, -1.0); });
  if (s == 0) throw PreconditionError("reflection_identity_2d needs a state proportional to (1, +-i, +-i, -1)");
  if (t < 0) throw PreconditionError("t must be nonnegative");
  const WaveField2D f = evolve_2d(theta, p, {}, t);
  const Complex factor = (t % 2 == 0 ? 1.0 : -1.0) * (static_cast<double>(s) * kI);
  const Matrix4C j = exchange_matrix_2d();
  double worst = 0.0;
  for (int x = -t; x <= t; ++x) {
    const int span = t - std::abs(x);
    for (int y = -span; y <= span; y += 2) {
      const Spinor4 diff = reflected(f, x, y) - factor * (j * reflected(f, -x, -y));
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace qwalk
