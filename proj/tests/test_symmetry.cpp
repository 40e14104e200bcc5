#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/errors.hpp"
#include "qwalk/sampling.hpp"
#include "qwalk/symmetry.hpp"

using namespace qwalk;

namespace {
const double kR2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("orthogonality class membership") {
  CHECK(in_phi_perp(QubitState(kR2, Complex(0.0, kR2))));
  CHECK(in_phi_perp(QubitState(kR2, Complex(0.0, -kR2))));
  CHECK(in_phi_perp(phi_perp_state(1.7, -1)));
  CHECK_FALSE(in_phi_perp(QubitState(1.0, 0.0)));
  CHECK_FALSE(in_phi_perp(QubitState(kR2, kR2)));
}

TEST_CASE("classification of (1, i)/sqrt 2 and (1, 0)") {
  const CoinParameter half(0.5);
  const SymmetryVerdict1D v = classify_1d(QubitState(kR2, Complex(0.0, kR2)), half, 50);
  CHECK(v.in_phi_perp);
  CHECK(v.empirically_symmetric);
  CHECK(v.zero_mean);
  const SymmetryVerdict1D w = classify_1d(QubitState(1.0, 0.0), half, 5);
  CHECK_FALSE(w.in_phi_perp);
  CHECK_FALSE(w.empirically_symmetric);
  CHECK_FALSE(w.zero_mean);
  // t = 3 hand distribution is {3: 1/8, 1: 5/8, -1: 1/8, -3: 1/8}
  CHECK(empirical_symmetric_1d(QubitState(1.0, 0.0), half, 2));
  CHECK_FALSE(empirical_symmetric_1d(QubitState(1.0, 0.0), half, 3));
}

TEST_CASE("sampled class members are symmetric for general p") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (double pv : {0.15, 0.25, 0.75, 0.95}) {
    for (int s : {1, -1}) {
      const QubitState theta = phi_perp_state(phase(rng), s);
      CHECK(empirical_symmetric_1d(theta, CoinParameter(pv), 60));
    }
  }
}

TEST_CASE("expectation series") {
  const std::vector<double> e = expectation_series(QubitState(1.0, 0.0), CoinParameter(0.5), 3);
  REQUIRE(e.size() == 3);
  CHECK(e[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(e[2] == doctest::Approx(0.5));
}

TEST_CASE("reference table") {
  const ABTable ref = reference_ab_table();
  REQUIRE(ref.horizon() == 10);
  CHECK(ref.a_at(9) == 293.0 / 128.0);
  CHECK(ref.b_at(10) == 421.0 / 128.0);
  const ABTable t = extract_ab(CoinParameter(0.5), 10);
  CHECK(max_table_deviation(t, ref) < 1e-12);
  CHECK(kns_check(t));
}

TEST_CASE("b_{t+1} - a_t = 1 is special to p = 1/2") {
  CHECK(kns_check(extract_ab(CoinParameter(0.5), 30)));
  CHECK_FALSE(kns_check(extract_ab(CoinParameter(0.25), 10)));
  CHECK_FALSE(kns_check(extract_ab(CoinParameter(0.75), 10)));
  // Fails from the first step: b_2 - a_1 = 0.9330 at p = 0.25.
  const ABTable t = extract_ab(CoinParameter(0.25), 3);
  CHECK(t.b_at(2) - t.a_at(1) == doctest::Approx(0.9330127).epsilon(1e-6));
}

TEST_CASE("exchange matrices") {
  const Matrix2C j = exchange_matrix_1d();
  CHECK((j * j + Matrix2C::Identity()).norm() < 1e-15);
  const Matrix4C j2 = exchange_matrix_2d();
  CHECK((j2 * j2 - Matrix4C::Identity()).norm() < 1e-15);
}

TEST_CASE("1D reflection identity") {
  for (double pv : {0.25, 0.5, 0.75}) {
    for (int s : {1, -1}) {
      const QubitState theta = phi_perp_state(-0.6, s);
      for (int t = 0; t <= 20; ++t) CHECK(reflection_identity_1d(theta, CoinParameter(pv), t) < 1e-12);
    }
  }
  CHECK_THROWS_AS(reflection_identity_1d(QubitState(1.0, 0.0), CoinParameter(0.5), 3), PreconditionError);
  CHECK_THROWS_AS(reflection_identity_1d(QubitState(kR2, kR2), CoinParameter(0.5), 3), PreconditionError);
}

TEST_CASE("2D class membership") {
  std::mt19937_64 rng(31);
  CHECK(in_phi_perp_2d(phi_perp_pattern_state_2d(0.0, 1)));
  CHECK(in_phi_perp_2d(phi_perp_pattern_state_2d(2.2, -1)));
  for (int i = 0; i < 10; ++i) CHECK(in_phi_perp_2d(random_phi_perp_state_2d(rng)));
  CHECK_FALSE(in_phi_perp_2d(QuditState(1.0, 0.0, 0.0, 0.0)));
  CHECK_FALSE(in_phi_perp_2d(QuditState(0.5, 0.5, 0.5, 0.5)));
  CHECK_FALSE(empirical_symmetric_2d(QuditState(1.0, 0.0, 0.0, 0.0), CoinParameter(0.5), 3));
  CHECK_THROWS_AS(reflection_identity_2d(QuditState(1.0, 0.0, 0.0, 0.0), CoinParameter(0.5), 2), PreconditionError);
}

// Under the square-lattice difference equations (components moving along
// +x, -x, +y, -y) the pattern states are not four-way symmetric and the
// point-reflection identity fails already at t = 0: J2 theta = -theta, so
// the residual is |(1 + s i) theta_j| = sqrt(2)/2.
// What holds instead is a reflection through the anti-diagonal:
//   Omega_{x,y} = -J2 Omega_{-y,-x}.
TEST_CASE("pattern states: point reflection fails, anti-diagonal reflection holds") {
  const Matrix4C j2 = exchange_matrix_2d();
  for (double pv : {0.25, 0.5, 0.75}) {
    const CoinParameter p(pv);
    for (int s : {1, -1}) {
      const QuditState theta = phi_perp_pattern_state_2d(0.8, s);
      CHECK(reflection_identity_2d(theta, p, 0) == doctest::Approx(std::sqrt(2.0) / 2.0));
      CHECK_FALSE(empirical_symmetric_2d(theta, p, 4));
      double worst = 0.0;
      for (int t = 0; t <= 12; ++t) {
        const WaveField2D f = evolve_2d(theta, p, {}, t);
        for (int x = -t; x <= t; ++x)
          for (int y = -t; y <= t; ++y) worst = std::max(worst, (f.amplitude(x, y) + j2 * f.amplitude(-y, -x)).norm());
      }
      CHECK(worst < 1e-12);
    }
  }
}
