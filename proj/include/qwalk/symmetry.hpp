#pragma once

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/walk1d.hpp"
#include "qwalk/walk2d.hpp"

namespace qwalk {

// Reflection orientation used by the symmetry identities: the walker with
// (H zeta)_x = Q zeta_{x-1} + P zeta_{x+1}, i.e. the walk1d/walk2d fields
// read through (x, y) -> (-x, -y).

// |d1| = |d2| and d1 conj(d2) + conj(d1) d2 = 0, both within 1e-12.
bool in_phi_perp(const QubitState& theta);
// |P(x,t) - P(-x,t)| <= 1e-12 for every t in 1..horizon and every x.
bool empirical_symmetric_1d(const QubitState& theta, const CoinParameter& p, int horizon);
// E(X_t) for t = 1..horizon (element t-1 holds time t).
std::vector<double> expectation_series(const QubitState& theta, const CoinParameter& p, int horizon);

struct SymmetryVerdict1D {
  bool in_phi_perp = false;
  bool empirically_symmetric = false;
  bool zero_mean = false;  // |E(X_t)| <= 1e-12 for t = 1..horizon
  int horizon = 0;
};
SymmetryVerdict1D classify_1d(const QubitState& theta, const CoinParameter& p, int horizon);

// a_t = E(X_t) from (1, 0); b_t = E(X_t) from (1, 1)/sqrt 2.
struct ABTable {
  std::vector<double> a;  // a[t-1] = a_t
  std::vector<double> b;

  int horizon() const noexcept { return static_cast<int>(a.size()); }
  double a_at(int t) const { return a.at(static_cast<std::size_t>(t - 1)); }
  double b_at(int t) const { return b.at(static_cast<std::size_t>(t - 1)); }
};
ABTable extract_ab(const CoinParameter& p, int horizon);
// Published p = 1/2 values for t = 1..10.
ABTable reference_ab_table();
// b_{t+1} - a_t = 1 within 1e-10 for t = 1..horizon-1. Needs horizon >= 2.
bool kns_check(const ABTable& table);
// Largest |x| difference between two tables over their common horizon.
double max_table_deviation(const ABTable& lhs, const ABTable& rhs);

// J = [[0, -1], [1, 0]].
Matrix2C exchange_matrix_1d();
// The 4x4 anti-diagonal sign matrix [[0,0,0,1],[0,0,-1,0],[0,-1,0,0],[1,0,0,0]].
Matrix4C exchange_matrix_2d();

// For theta proportional to (1, s i) with s = +-1:
//   max_x |zeta_x - (-1)^t (s i) J zeta_{-x}|   at time t.
// Throws PreconditionError for any other state.
double reflection_identity_1d(const QubitState& theta, const CoinParameter& p, int t);

// Equal moduli and sum_{i != j} k_i conj(k_j) = 0, within 1e-12.
bool in_phi_perp_2d(const QuditState& theta);
// |Omega_{x,y}|^2 = |Omega_{-x,y}|^2 = |Omega_{x,-y}|^2 = |Omega_{-x,-y}|^2
// within 1e-12 for every t in 1..horizon.
bool empirical_symmetric_2d(const QuditState& theta, const CoinParameter& p, int horizon);
// For theta proportional to (1, s i, s i, -1), s = +-1:
//   max_{x,y} |Omega_{x,y} - (-1)^t (s i) J2 Omega_{-x,-y}|   at time t.
double reflection_identity_2d(const QuditState& theta, const CoinParameter& p, int t);

}  // namespace qwalk
