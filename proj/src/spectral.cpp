#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "ipow.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

QuadratureGrid::QuadratureGrid(int nodes) : n_(nodes) {
  if (nodes < 4 || (nodes & (nodes - 1)) != 0) {
    throw InvalidParameter("quadrature grid size must be a power of two >= 4, got " + std::to_string(nodes));
  }
}

double sigma(const CoinParameter& p, Wavenumber k) {
  return std::asin(p.sqrt_p() * std::sin(k.value()));
}

double group_velocity(const CoinParameter& p, Wavenumber k) {
  const double s = std::sin(k.value());
  return p.sqrt_p() * std::cos(k.value()) / std::sqrt(1.0 - p.p() * s * s);
}

namespace {

// Null vector of the singular 2x2 matrix s - lambda I, from whichever row
// is better conditioned.
Spinor2 null_vector(const Matrix2C& s, Complex lambda) {
  const Spinor2 from_row0(s(0, 1), lambda - s(0, 0));
  const Spinor2 from_row1(lambda - s(1, 1), s(1, 0));
  const Spinor2& h = from_row0.squaredNorm() >= from_row1.squaredNorm() ? from_row0 : from_row1;
  return h.normalized();
}

double hellmann_feynman_velocity(const auto& derivative, const auto& h, Complex lambda) {
  const Complex num = h.dot(derivative * h);  // h^H S' h
  return -std::imag(num / lambda);
}

}  // namespace

std::array<EigenBranch1D, 2> eigensystem_1d(const CoinParameter& p, Wavenumber k, const QubitState& theta) {
  const Matrix2C s = kernel_1d(p, k);
  const Matrix2C ds = kernel_1d_derivative(p, k);
  const double sin_k = std::sin(k.value());
  const double root = std::sqrt(1.0 - p.p() * sin_k * sin_k);
  const Complex c(0.0, -p.sqrt_p() * sin_k);  // trace / 2
  const std::array<Complex, 2> lambdas{c + root, c - root};

  std::array<EigenBranch1D, 2> branches;
  for (std::size_t j = 0; j < 2; ++j) {
    const Spinor2 h = null_vector(s, lambdas[j]);
    const Complex overlap = h.dot(theta.spinor());
    branches[j] = {lambdas[j], h, std::norm(overlap), hellmann_feynman_velocity(ds, h, lambdas[j])};
  }
  return branches;
}

std::array<EigenBranch2D, 4> eigensystem_2d(const CoinParameter& p, Wavenumber m, Wavenumber n,
                                            const QuditState& theta) {
  const Matrix4C s = kernel_2d(p, m, n);
  Eigen::ComplexSchur<Matrix4C> schur(s);
  if (schur.info() != Eigen::Success) throw DegenerateSpectrum("complex Schur decomposition did not converge");
  const Matrix4C& t = schur.matrixT();
  const Matrix4C& u = schur.matrixU();

  std::array<double, 4> phases;
  for (int j = 0; j < 4; ++j) phases[static_cast<std::size_t>(j)] = std::arg(t(j, j));
  std::array<double, 4> sorted = phases;
  std::sort(sorted.begin(), sorted.end());
  double min_gap = sorted[0] + 2.0 * kPi - sorted[3];
  for (std::size_t j = 1; j < 4; ++j) min_gap = std::min(min_gap, sorted[j] - sorted[j - 1]);
  if (min_gap < kMinPhaseSeparation) {
    throw DegenerateSpectrum("kernel eigenphases closer than 1e-8 at (m, n) = (" + std::to_string(m.value()) +
                             ", " + std::to_string(n.value()) + ")");
  }

  const Matrix4C dm = kernel_2d_derivative_m(p, m, n);
  const Matrix4C dn = kernel_2d_derivative_n(p, m, n);
  std::array<EigenBranch2D, 4> branches;
  for (int j = 0; j < 4; ++j) {
    const Spinor4 h = u.col(j);
    const Complex lambda = t(j, j);
    branches[static_cast<std::size_t>(j)] = {lambda, h, std::norm(h.dot(theta.spinor())),
                                             hellmann_feynman_velocity(dm, h, lambda),
                                             hellmann_feynman_velocity(dn, h, lambda)};
  }
  return branches;
}

double limit_moment_1d(const QubitState& theta, const CoinParameter& p, int alpha, const QuadratureGrid& grid) {
  if (alpha < 1) throw InvalidParameter("limit_moment_1d: alpha must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(grid.size()));
  parallel_for(0, values.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t m = lo; m < hi; ++m) {
      const auto branches = eigensystem_1d(p, grid.wavenumber(static_cast<int>(m)), theta);
      double v = 0.0;
      for (const auto& b : branches) v += b.weight * detail::ipow(b.velocity, alpha);
      values[m] = v;
    }
  });
  return pairwise_sum(values) / grid.size();
}

std::vector<double> limit_moments_2d(const QuditState& theta, const CoinParameter& p,
                                     const std::vector<std::pair<int, int>>& orders, const QuadratureGrid& grid) {
  for (const auto& [a, b] : orders) {
    if (a < 0 || b < 0 || a + b < 1) throw InvalidParameter("limit_moment_2d: need alpha, beta >= 0 and alpha+beta >= 1");
  }
  const std::size_t n = static_cast<std::size_t>(grid.size());
  const std::size_t k = orders.size();
  // order-major so each order's values are contiguous for the reduction
  std::vector<double> values(k * n * n);
  parallel_for(0, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Wavenumber wm = grid.wavenumber(static_cast<int>(i));
      for (std::size_t j = 0; j < n; ++j) {
        const auto branches = eigensystem_2d(p, wm, grid.wavenumber(static_cast<int>(j)), theta);
        for (std::size_t o = 0; o < k; ++o) {
          double v = 0.0;
          for (const auto& br : branches) {
            v += br.weight * detail::ipow(br.velocity_x, orders[o].first) * detail::ipow(br.velocity_y, orders[o].second);
          }
          values[o * n * n + i * n + j] = v;
        }
      }
    }
  });
  std::vector<double> out(k);
  const double inv = 1.0 / static_cast<double>(n * n);
  for (std::size_t o = 0; o < k; ++o) {
    out[o] = pairwise_sum(std::span<const double>(values).subspan(o * n * n, n * n)) * inv;
  }
  return out;
}

double limit_moment_2d(const QuditState& theta, const CoinParameter& p, int alpha, int beta,
                       const QuadratureGrid& grid) {
  return limit_moments_2d(theta, p, {{alpha, beta}}, grid).front();
}

bool MomentReport::converging() const {
  return !gaps.empty() && gaps.back() <= gaps.front();
}

namespace {

void check_ladder(const std::vector<int>& ladder) {
  if (ladder.empty()) throw InvalidParameter("time ladder must not be empty");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 1) throw InvalidParameter("time ladder entries must be >= 1");
    if (i > 0 && ladder[i] <= ladder[i - 1]) throw InvalidParameter("time ladder must be strictly increasing");
  }
}

void fill_gaps(MomentReport& r) {
  r.gaps.clear();
  for (double s : r.simulated) r.gaps.push_back(std::abs(s - r.limit));
}

}  // namespace

MomentReport convergence_report_1d(const QubitState& theta, const CoinParameter& p, int alpha,
                                   const std::vector<int>& ladder, const QuadratureGrid& grid) {
  check_ladder(ladder);
  if (alpha < 0) throw InvalidParameter("alpha must be nonnegative");
  MomentReport r;
  r.alpha = alpha;
  r.times = ladder;
  r.limit = alpha == 0 ? 1.0 : limit_moment_1d(theta, p, alpha, grid);
  std::size_t next = 0;
  evolve_1d_each(theta, p, {}, ladder.back(), [&](const WaveField1D& f) {
    if (next < ladder.size() && f.time() == ladder[next]) {
      r.simulated.push_back(moment_1d(distribution_1d(f), alpha));
      ++next;
    }
  });
  fill_gaps(r);
  return r;
}

MomentReport convergence_report_2d(const QuditState& theta, const CoinParameter& p, int alpha, int beta,
                                   const std::vector<int>& ladder, const QuadratureGrid& grid) {
  check_ladder(ladder);
  if (alpha < 0 || beta < 0) throw InvalidParameter("alpha and beta must be nonnegative");
  MomentReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.times = ladder;
  r.limit = (alpha + beta == 0) ? 1.0 : limit_moment_2d(theta, p, alpha, beta, grid);
  std::size_t next = 0;
  evolve_2d_each(theta, p, {}, ladder.back(), [&](const WaveField2D& f) {
    if (next < ladder.size() && f.time() == ladder[next]) {
      r.simulated.push_back(joint_moment_2d(f, alpha, beta));
      ++next;
    }
  });
  fill_gaps(r);
  return r;
}

}  // namespace qwalk
