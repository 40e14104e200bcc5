#include <doctest.h>

#include <cmath>
#include <random>

#include "fourier_oracle.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/sampling.hpp"
#include "qwalk/walk2d.hpp"

using namespace qwalk;

TEST_CASE("t = 1 masses from (1,0,0,0)") {
  for (double pv : {0.25, 0.5, 0.75, 0.1}) {
    const double q = 1.0 - pv;
    const Distribution2D d = distribution_2d(evolve_2d(QuditState(1.0, 0.0, 0.0, 0.0), CoinParameter(pv), {}, 1));
    CHECK(d.probability(1, 0) == doctest::Approx(pv * pv).epsilon(1e-14));
    CHECK(d.probability(-1, 0) == doctest::Approx(pv * q).epsilon(1e-14));
    CHECK(d.probability(0, 1) == doctest::Approx(pv * q).epsilon(1e-14));
    CHECK(d.probability(0, -1) == doctest::Approx(q * q).epsilon(1e-14));
    CHECK(d.masses.size() == 4);
  }
}

TEST_CASE("each component moves along its own axis direction") {
  // With the initial state in component j, the coin column j spreads it and
  // component i lands at site e_i.
  const CoinParameter p(0.3);
  const Matrix4C c = coin_2d(p);
  const int dx[] = {1, -1, 0, 0};
  const int dy[] = {0, 0, 1, -1};
  for (int j = 0; j < 4; ++j) {
    Spinor4 e = Spinor4::Zero();
    e(j) = 1.0;
    const WaveField2D f = evolve_2d(QuditState(e), p, {}, 1);
    for (int i = 0; i < 4; ++i) {
      const Spinor4 a = f.amplitude(dx[i], dy[i]);
      CHECK(std::abs(a(i) - c(i, j)) < 1e-15);
      for (int l = 0; l < 4; ++l) {
        if (l != i) CHECK(std::abs(a(l)) == 0.0);
      }
    }
  }
}

TEST_CASE("diamond storage") {
  const WaveField2D f = evolve_2d(QuditState(0.5, 0.5, 0.5, 0.5), CoinParameter(0.5), {}, 4);
  CHECK(f.side() == 5);
  for (std::size_t u = 0; u < f.side(); ++u) {
    for (std::size_t v = 0; v < f.side(); ++v) {
      const int x = f.site_x(u, v), y = f.site_y(u, v);
      CHECK(std::abs(x) + std::abs(y) <= 4);
      CHECK(((x + y) % 2 + 2) % 2 == 0);
      CHECK(f.amplitude(x, y) == f.at(u, v));
    }
  }
  CHECK(f.amplitude(1, 0).isZero());
  CHECK(f.amplitude(5, 0).isZero());
}

TEST_CASE("evolution agrees with the wavenumber-space oracle") {
  std::mt19937_64 rng(5);
  for (double pv : {0.3, 0.5}) {
    const CoinParameter p(pv);
    const QuditState theta = random_qudit_state(rng);
    for (int t : {1, 4, 12}) {
      const double phase = t == 4 ? 0.9 : 0.0;
      const WaveField2D f = evolve_2d(theta, p, {phase}, t);
      const auto ref = oracle::fourier_2d(theta, p, phase, t);
      const int w = 2 * t + 1;
      double dev = 0.0;
      for (int x = -t; x <= t; ++x)
        for (int y = -t; y <= t; ++y) dev = std::max(dev, (f.amplitude(x, y) - ref[(x + t) * w + (y + t)]).norm());
      CHECK(dev < 1e-12);
    }
  }
}

TEST_CASE("total probability is conserved") {
  std::mt19937_64 rng(9);
  const QuditState theta = random_qudit_state(rng);
  evolve_2d_each(theta, CoinParameter(0.35), {}, 80, [](const WaveField2D& f) {
    CHECK(std::abs(f.total_probability() - 1.0) < 1e-12);
  });
}

TEST_CASE("joint moments from the field and from the distribution agree") {
  std::mt19937_64 rng(3);
  const QuditState theta = random_qudit_state(rng);
  const WaveField2D f = evolve_2d(theta, CoinParameter(0.6), {}, 25);
  const Distribution2D d = distribution_2d(f);
  for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}) {
    CHECK(joint_moment_2d(f, a, b) == doctest::Approx(joint_moment_2d(d, a, b)).epsilon(1e-12));
  }
  CHECK(joint_moment_2d(d, 0, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(joint_moment_2d(distribution_2d(init_2d(theta)), 1, 0), PreconditionError);
}

TEST_CASE("distribution order is lexicographic") {
  const Distribution2D d = distribution_2d(evolve_2d(QuditState(0.5, 0.5, 0.5, 0.5), CoinParameter(0.4), {}, 6));
  for (std::size_t i = 1; i < d.masses.size(); ++i) {
    const auto& a = d.masses[i - 1];
    const auto& b = d.masses[i];
    CHECK((a.x < b.x || (a.x == b.x && a.y < b.y)));
  }
}

TEST_CASE("product states do not factor into two line walks") {
  // Components 1 and 4 move along different axes from 2 and 3, so the move
  // set is not a Cartesian product of two line shifts. A product initial
  // state therefore does not give the product of two line distributions.
  const CoinParameter p(0.5);
  const QubitState a(1.0, 0.0);
  const QuditState theta = QuditState::product(a, a);
  const Distribution2D d = distribution_2d(evolve_2d(theta, p, {}, 2));
  const Distribution1D line = distribution_1d(evolve_1d(a, p, {}, 2));
  double worst = 0.0;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) worst = std::max(worst, std::abs(d.probability(x, y) - line.probability(x) * line.probability(y)));
  CHECK(worst > 1e-2);
}

TEST_CASE("product state slot order") {
  const QubitState a = QubitState::normalized(1.0, 2.0);
  const QubitState b = QubitState::normalized(Complex(0.0, 1.0), 3.0);
  const QuditState k = QuditState::product(a, b);
  CHECK(std::abs(k.k(1) - a.d1() * b.d2()) < 1e-15);
  CHECK(std::abs(k.k(2) - a.d2() * b.d1()) < 1e-15);
}
