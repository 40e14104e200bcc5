#include <doctest.h>

#include <cmath>
#include <limits>

#include "qwalk/coin.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;

TEST_CASE("coin parameter accepts the open unit interval only") {
  CHECK_NOTHROW(CoinParameter(0.5));
  CHECK_NOTHROW(CoinParameter(1e-9));
  CHECK_THROWS_AS(CoinParameter(0.0), InvalidParameter);
  CHECK_THROWS_AS(CoinParameter(1.0), InvalidParameter);
  CHECK_THROWS_AS(CoinParameter(1.5), InvalidParameter);
  CHECK_THROWS_AS(CoinParameter(-0.2), InvalidParameter);
  CHECK_THROWS_AS(CoinParameter(std::numeric_limits<double>::quiet_NaN()), InvalidParameter);
  const CoinParameter p(0.3);
  CHECK(p.q() == doctest::Approx(0.7));
  CHECK(p.sqrt_p() * p.sqrt_p() == doctest::Approx(0.3));
}

TEST_CASE("wavenumber range and wrapping") {
  CHECK_NOTHROW(Wavenumber{-kPi});
  CHECK_THROWS_AS(Wavenumber{kPi}, InvalidParameter);
  CHECK_THROWS_AS(Wavenumber(4.0), InvalidParameter);
  CHECK(Wavenumber::wrapped(kPi).value() == doctest::Approx(-kPi));
  CHECK(Wavenumber::wrapped(2 * kPi + 0.25).value() == doctest::Approx(0.25));
  CHECK(Wavenumber::wrapped(-3 * kPi + 0.1).value() == doctest::Approx(-kPi + 0.1));
}

TEST_CASE("Hadamard coin at p = 1/2") {
  const Matrix2C h = coin_1d(CoinParameter(0.5));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(h(0, 0) - r) < 1e-15);
  CHECK(std::abs(h(0, 1) - r) < 1e-15);
  CHECK(std::abs(h(1, 0) - r) < 1e-15);
  CHECK(std::abs(h(1, 1) + r) < 1e-15);
}

TEST_CASE("coins and kernels are unitary") {
  for (double pv : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const CoinParameter p(pv);
    CHECK(unitarity_defect(coin_1d(p)) < 1e-15);
    CHECK(unitarity_defect(coin_2d(p)) < 1e-15);
    for (double k : {-3.0, -1.0, 0.0, 0.4, 2.5}) {
      CHECK(unitarity_defect(kernel_1d(p, Wavenumber(k))) < 1e-14);
      CHECK(unitarity_defect(kernel_2d(p, Wavenumber(k), Wavenumber(0.7))) < 1e-14);
      CHECK(std::abs(kernel_1d(p, Wavenumber(k)).determinant() + 1.0) < 1e-14);
    }
  }
}

TEST_CASE("2D coin equals the Kronecker square of the line coin") {
  for (double pv : {0.25, 0.5, 0.8}) {
    const CoinParameter p(pv);
    const Matrix2C c = coin_1d(p);
    Matrix4C kron;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) kron(2 * i + a, 2 * j + b) = c(i, j) * c(a, b);
    CHECK((coin_2d(p) - kron).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(coin_2d(p)(0, 0) - pv) < 1e-15);
    CHECK(std::abs(coin_2d(p)(0, 3) - (1 - pv)) < 1e-15);
    CHECK(std::abs(coin_2d(p)(0, 1) - std::sqrt(pv * (1 - pv))) < 1e-15);
  }
}

TEST_CASE("kernel derivatives match central differences") {
  const CoinParameter p(0.35);
  const double h = 1e-6;
  for (double k : {-2.0, 0.3, 1.4}) {
    const Matrix2C fd = (kernel_1d(p, Wavenumber(k + h)) - kernel_1d(p, Wavenumber(k - h))) / (2 * h);
    CHECK((fd - kernel_1d_derivative(p, Wavenumber(k))).cwiseAbs().maxCoeff() < 1e-8);
    const Wavenumber n(-0.8);
    const Matrix4C fm =
        (kernel_2d(p, Wavenumber(k + h), n) - kernel_2d(p, Wavenumber(k - h), n)) / (2 * h);
    CHECK((fm - kernel_2d_derivative_m(p, Wavenumber(k), n)).cwiseAbs().maxCoeff() < 1e-8);
    const Matrix4C fn =
        (kernel_2d(p, n, Wavenumber(k + h)) - kernel_2d(p, n, Wavenumber(k - h))) / (2 * h);
    CHECK((fn - kernel_2d_derivative_n(p, n, Wavenumber(k))).cwiseAbs().maxCoeff() < 1e-8);
  }
}
