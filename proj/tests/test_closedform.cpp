#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qwalk/closedform.hpp"
#include "qwalk/sampling.hpp"

using namespace qwalk;

namespace {

Complex evaluate(const LaurentCoefficients& c, double k) {
  Complex s = 0.0;
  for (int n = c.min_index(); n <= c.max_index(); ++n) s += c[n] * std::polar(1.0, -n * k);
  return s;
}

}  // namespace

TEST_CASE("Laurent coefficients read zero outside storage") {
  const LaurentCoefficients c(-1, {1.0, 2.0, 3.0});
  CHECK(c[-1] == Complex(1.0));
  CHECK(c[1] == Complex(3.0));
  CHECK(c[2] == Complex(0.0));
  CHECK(c[-5] == Complex(0.0));
  CHECK(c.max_index() == 1);
}

TEST_CASE("Chebyshev polynomials of the second kind") {
  CHECK(chebyshev_u(0, 0.3) == Complex(1.0));
  CHECK(std::abs(chebyshev_u(2, 0.3) - (4 * 0.09 - 1)) < 1e-15);
  for (int n = 0; n < 12; ++n) {
    const double th = 0.7;
    CHECK(std::abs(chebyshev_u(n, std::cos(th)) - std::sin((n + 1) * th) / std::sin(th)) < 1e-12);
  }
  const ChebyshevTable table(8);
  CHECK(table.coefficients(3) == std::vector<std::int64_t>{0, -4, 0, 8});
  CHECK(table.coefficients(4) == std::vector<std::int64_t>{1, 0, -12, 0, 16});
  const Complex y(0.2, -0.4);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(table.evaluate(n, y) - chebyshev_u(n, y)) < 1e-12);
}

TEST_CASE("low-order alpha coefficients") {
  const CoinParameter p(0.36);
  const AlphaTable t(p, 3);
  CHECK(t.alpha(0).empty());
  CHECK(t.alpha(1)[0] == Complex(1.0));
  // 2c = sqrt p (e^{-ik} - e^{ik})
  CHECK(std::abs(t.alpha(2)[1] - 0.6) < 1e-15);
  CHECK(std::abs(t.alpha(2)[-1] + 0.6) < 1e-15);
  CHECK(std::abs(t.alpha(2)[0]) == 0.0);
  // (2c)^2 + 1 = p e^{-2ik} + (1 - 2p) + p e^{2ik}
  CHECK(std::abs(t.alpha(3)[2] - 0.36) < 1e-15);
  CHECK(std::abs(t.alpha(3)[0] - (1 - 0.72)) < 1e-15);
  CHECK(std::abs(t.alpha(3)[-2] - 0.36) < 1e-15);
}

TEST_CASE("alpha_t is i^{t-1} U_{t-1}(-i c) pointwise in k") {
  for (double pv : {0.2, 0.5, 0.9}) {
    const CoinParameter p(pv);
    const AlphaTable table(p, 25);
    for (double k : {-2.5, -0.4, 0.9, 2.0}) {
      const Complex c = 0.5 * std::sqrt(pv) * (std::polar(1.0, -k) - std::polar(1.0, k));
      for (int t = 1; t <= 25; ++t) {
        const Complex expect = std::pow(kI, t - 1) * chebyshev_u(t - 1, -kI * c);
        CHECK(std::abs(evaluate(table.alpha(t), k) - expect) < 1e-10);
      }
    }
  }
}

TEST_CASE("kernel powers decompose as alpha_t S + alpha_{t-1} I") {
  const CoinParameter p(0.7);
  const AlphaTable table(p, 15);
  for (double k : {-1.3, 0.2, 2.9}) {
    const Matrix2C s = kernel_1d(p, Wavenumber(k));
    Matrix2C power = Matrix2C::Identity();
    for (int t = 1; t <= 15; ++t) {
      power = s * power;
      const Matrix2C rhs = evaluate(table.alpha(t), k) * s +
                           (t == 1 ? Complex(0.0) : evaluate(table.alpha(t - 1), k)) * Matrix2C::Identity();
      CHECK((power - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("closed form reproduces step-by-step evolution") {
  std::mt19937_64 rng(13);
  for (double pv : {0.1, 0.5, 0.9}) {
    const CoinParameter p(pv);
    const AlphaTable table(p, 120);
    const QubitState theta = random_qubit_state(rng);
    const PhaseParameter k{-0.8};
    for (int t : {0, 1, 2, 57, 120}) {
      const WaveField1D a = evolve_1d(theta, p, k, t);
      const WaveField1D b = closed_form_field(theta, table, k, t);
      const WaveField1D c = closed_form_field(theta, p, k, t);
      for (int x = -t - 1; x <= t + 1; ++x) {
        CHECK((a.amplitude(x) - b.amplitude(x)).norm() < 1e-11);
        CHECK((b.amplitude(x) - c.amplitude(x)).norm() == 0.0);
      }
    }
  }
}

TEST_CASE("double-sum coefficient") {
  const CoinParameter p(0.25);
  CHECK(std::abs(double_sum_coefficient(p, 0, 0) - 1.0) < 1e-15);
  // alpha_2 = sqrt p e^{-ik} - sqrt p e^{ik}: j = 0 is index +1
  CHECK(std::abs(double_sum_coefficient(p, 1, 0) - 0.5) < 1e-15);
  CHECK(std::abs(double_sum_coefficient(p, 1, 1) + 0.5) < 1e-15);
  CHECK_THROWS_AS(double_sum_coefficient(p, 4, 5), std::out_of_range);
  CHECK_THROWS_AS(double_sum_coefficient(p, 4, -1), std::out_of_range);
  for (double pv : {0.25, 0.5, 0.75}) {
    const CoinParameter c(pv);
    const AlphaTable table(c, 31);
    for (int t = 0; t <= 30; ++t)
      for (int j = 0; j <= t; ++j)
        CHECK(std::abs(double_sum_coefficient(c, t, j) - table.alpha(t + 1)[t - 2 * j]) < 1e-12);
  }
}
