#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/walk1d.hpp"

namespace qwalk {

// Finite Laurent polynomial sum_n c_n e^{-i n k}. Index n is a lattice
// displacement: multiplying a wave function by e^{-i n k} moves it by +n.
class LaurentCoefficients {
 public:
  LaurentCoefficients() = default;
  LaurentCoefficients(int min_index, std::vector<Complex> coefficients);

  // Zero outside the stored range.
  Complex operator[](int n) const;
  int min_index() const noexcept { return min_index_; }
  int max_index() const noexcept { return min_index_ + static_cast<int>(c_.size()) - 1; }
  bool empty() const noexcept { return c_.empty(); }
  const std::vector<Complex>& coefficients() const noexcept { return c_; }

 private:
  int min_index_ = 0;
  std::vector<Complex> c_;
};

// U_n(y) by the three-term recurrence U_n = 2y U_{n-1} - U_{n-2}.
Complex chebyshev_u(int n, Complex y);

// Integer monomial coefficients of U_0 .. U_max: row n holds the
// coefficients of y^0 .. y^n. Exact for max_degree <= 60.
class ChebyshevTable {
 public:
  explicit ChebyshevTable(int max_degree);

  int max_degree() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
  Complex evaluate(int n, Complex y) const;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

// Cayley-Hamilton expansion of powers of the line kernel. With det S = -1
// and c = tr(S)/2 = (sqrt p / 2)(e^{-ik} - e^{ik}):
//   S^2 = 2c S + I,   S^t = alpha_t S + alpha_{t-1} I,
//   alpha_0 = 0, alpha_1 = 1, alpha_{t+1} = 2c alpha_t + alpha_{t-1}.
// alpha_t is supported on indices -(t-1), -(t-3), ..., t-1.
class AlphaTable {
 public:
  AlphaTable(const CoinParameter& p, int max_t);

  int max_t() const noexcept { return static_cast<int>(alpha_.size()) - 1; }
  const LaurentCoefficients& alpha(int t) const { return alpha_.at(static_cast<std::size_t>(t)); }
  const CoinParameter& coin() const noexcept { return p_; }

 private:
  CoinParameter p_;
  std::vector<LaurentCoefficients> alpha_;
};

// Laurent coefficients of alpha_t; t >= 1.
LaurentCoefficients alpha_coefficients(const CoinParameter& p, int t);

// Wave function at time t assembled from S^t = alpha_t S + alpha_{t-1} I:
//   phi1(x) = e^{itk}[alpha_t[x-1] (sqrt p d1 + sqrt q d2) + alpha_{t-1}[x] d1]
//   phi2(x) = e^{itk}[alpha_t[x+1] (sqrt q d1 - sqrt p d2) + alpha_{t-1}[x] d2]
WaveField1D closed_form_field(const QubitState& theta, const CoinParameter& p, PhaseParameter k, int t);
// Same, reusing a precomputed table (table.max_t() >= t).
WaveField1D closed_form_field(const QubitState& theta, const AlphaTable& table, PhaseParameter k, int t);

// Coefficient of e^{-ik(t-2j)} in alpha_{t+1}, by the explicit double sum
//   sum_m C(t-m, m) (sqrt p)^{t-2m} C(t-2m, j-m) (-1)^{j-m}.
// The alternating terms reach ~1e9 at t = 30, so the sum is accumulated in
// 113-bit floating point. Throws std::out_of_range unless 0 <= j <= t.
Complex double_sum_coefficient(const CoinParameter& p, int t, int j);

}  // namespace qwalk
