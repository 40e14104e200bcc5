#include "qwalk/closedform.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

LaurentCoefficients::LaurentCoefficients(int min_index, std::vector<Complex> coefficients)
    : min_index_(min_index), c_(std::move(coefficients)) {}

Complex LaurentCoefficients::operator[](int n) const {
  const long offset = static_cast<long>(n) - min_index_;
  if (offset < 0 || offset >= static_cast<long>(c_.size())) return 0.0;
  return c_[static_cast<std::size_t>(offset)];
}

Complex chebyshev_u(int n, Complex y) {
  if (n < 0) throw PreconditionError("chebyshev_u: degree must be nonnegative");
  Complex prev = 1.0;  // U_0
  if (n == 0) return prev;
  Complex cur = 2.0 * y;  // U_1
  for (int k = 2; k <= n; ++k) {
    Complex next = 2.0 * y * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChebyshevTable::ChebyshevTable(int max_degree) {
  if (max_degree < 0 || max_degree > 60) {
    throw InvalidParameter("ChebyshevTable degree must lie in [0, 60]");
  }
  rows_.push_back({1});
  if (max_degree >= 1) rows_.push_back({0, 2});
  for (int n = 2; n <= max_degree; ++n) {
    const auto& a = rows_[static_cast<std::size_t>(n - 1)];
    const auto& b = rows_[static_cast<std::size_t>(n - 2)];
    std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) row[i + 1] += 2 * a[i];
    for (std::size_t i = 0; i < b.size(); ++i) row[i] -= b[i];
    rows_.push_back(std::move(row));
  }
}

Complex ChebyshevTable::evaluate(int n, Complex y) const {
  const auto& row = coefficients(n);
  Complex acc = 0.0;
  for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * y + static_cast<double>(*it);
  return acc;
}

namespace {

// 2c * a + b, where 2c = sqrt p e^{-ik} - sqrt p e^{ik} shifts index n to
// n+1 (coefficient +sqrt p) and to n-1 (coefficient -sqrt p).
LaurentCoefficients next_alpha(double sqrt_p, const LaurentCoefficients& a, const LaurentCoefficients& b) {
  int lo = a.min_index() - 1;
  int hi = a.max_index() + 1;
  if (!b.empty()) {
    lo = std::min(lo, b.min_index());
    hi = std::max(hi, b.max_index());
  }
  std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (int n = a.min_index(); n <= a.max_index(); ++n) {
    const Complex v = a[n];
    c[static_cast<std::size_t>(n + 1 - lo)] += sqrt_p * v;
    c[static_cast<std::size_t>(n - 1 - lo)] -= sqrt_p * v;
  }
  for (int n = b.min_index(); n <= b.max_index() && !b.empty(); ++n) {
    c[static_cast<std::size_t>(n - lo)] += b[n];
  }
  return LaurentCoefficients(lo, std::move(c));
}

}  // namespace

AlphaTable::AlphaTable(const CoinParameter& p, int max_t) : p_(p) {
  if (max_t < 0) throw PreconditionError("AlphaTable: max_t must be nonnegative");
  alpha_.reserve(static_cast<std::size_t>(max_t) + 1);
  alpha_.emplace_back();  // alpha_0 = 0
  if (max_t >= 1) alpha_.emplace_back(0, std::vector<Complex>{1.0});
  for (int t = 2; t <= max_t; ++t) {
    alpha_.push_back(next_alpha(p.sqrt_p(), alpha_[static_cast<std::size_t>(t - 1)],
                                alpha_[static_cast<std::size_t>(t - 2)]));
  }
}

LaurentCoefficients alpha_coefficients(const CoinParameter& p, int t) {
  if (t < 1) throw PreconditionError("alpha_coefficients: t must be >= 1");
  return AlphaTable(p, t).alpha(t);
}

WaveField1D closed_form_field(const QubitState& theta, const CoinParameter& p, PhaseParameter k, int t) {
  if (t < 0) throw PreconditionError("closed_form_field: t must be nonnegative");
  if (t == 0) return init_1d(theta);
  return closed_form_field(theta, AlphaTable(p, t), k, t);
}

WaveField1D closed_form_field(const QubitState& theta, const AlphaTable& table, PhaseParameter k, int t) {
  if (t < 0 || t > table.max_t()) throw PreconditionError("closed_form_field: t outside the table");
  if (t == 0) return init_1d(theta);
  const CoinParameter& p = table.coin();
  const Complex d1 = theta.d1();
  const Complex d2 = theta.d2();
  const Complex right = p.sqrt_p() * d1 + p.sqrt_q() * d2;
  const Complex left = p.sqrt_q() * d1 - p.sqrt_p() * d2;
  const Complex phase = std::polar(1.0, k.k * t);
  const LaurentCoefficients& at = table.alpha(t);
  const LaurentCoefficients& prev = table.alpha(t - 1);

  std::vector<Spinor2> lattice(static_cast<std::size_t>(t) + 1);
  for (int i = 0; i <= t; ++i) {
    const int x = 2 * i - t;
    lattice[static_cast<std::size_t>(i)] =
        Spinor2(phase * (at[x - 1] * right + prev[x] * d1), phase * (at[x + 1] * left + prev[x] * d2));
  }
  return WaveField1D(t, std::move(lattice));
}

Complex double_sum_coefficient(const CoinParameter& p, int t, int j) {
  if (t < 0) throw std::out_of_range("double_sum_coefficient: t must be nonnegative");
  if (j < 0 || j > t) {
    throw std::out_of_range("double_sum_coefficient: j = " + std::to_string(j) + " outside [0, " +
                            std::to_string(t) + "]");
  }
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  const Quad sqrt_p = boost::multiprecision::sqrt(Quad(p.p()));

  auto binomial = [](int n, int r) {
    Quad b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
  };

  Quad sum = 0;
  for (int m = 0; 2 * m <= t; ++m) {
    const int r = j - m;
    if (r < 0 || r > t - 2 * m) continue;
    const Quad term = binomial(t - m, m) * boost::multiprecision::pow(sqrt_p, t - 2 * m) *
                      binomial(t - 2 * m, r);
    sum += (r % 2 == 0) ? term : -term;
  }
  return Complex(static_cast<double>(sum), 0.0);
}

}  // namespace qwalk
