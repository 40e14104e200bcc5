#include "qwalk/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <utility>

#include "qwalk/closedform.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/localization.hpp"
#include "qwalk/sampling.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/symmetry.hpp"
#include "qwalk/walk1d.hpp"
#include "qwalk/walk2d.hpp"

namespace qwalk {

namespace {

using Rng = std::mt19937_64;
constexpr std::uint64_t kSeed = 0x5157414c4bULL;

const double kCoins[] = {0.25, 0.5, 0.75};

std::string printf_string(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct Check {
  CriterionOutcome& out;
  bool ok = true;

  void expect(bool cond, std::string line) {
    if (!cond) ok = false;
    out.details.push_back((cond ? "ok   " : "FAIL ") + std::move(line));
  }
  void note(std::string line) { out.details.push_back("     " + std::move(line)); }
};

double field_deviation(const WaveField1D& a, const WaveField1D& b) {
  const int t = std::max(a.time(), b.time());
  double dev = 0.0;
  for (int x = -t - 1; x <= t + 1; ++x) dev = std::max(dev, (a.amplitude(x) - b.amplitude(x)).norm());
  return dev;
}

// 1. Total probability stays 1.
void unitarity(Check& c, ValidationScale scale) {
  const bool quick = scale == ValidationScale::kQuick;
  const int t1 = quick ? 50 : 1000;
  const int t2 = quick ? 50 : 300;
  Rng rng(kSeed + 1);
  double dev1 = 0.0, dev2 = 0.0;
  for (double pv : kCoins) {
    const CoinParameter p(pv);
    for (int s = 0; s < 10; ++s) {
      const QubitState theta = random_qubit_state(rng);
      dev1 = std::max(dev1, std::abs(distribution_1d(evolve_1d(theta, p, {}, t1)).total() - 1.0));
      const QuditState th2 = random_qudit_state(rng);
      dev2 = std::max(dev2, std::abs(distribution_2d(evolve_2d(th2, p, {}, t2)).total() - 1.0));
    }
  }
  c.expect(dev1 <= 1e-12, printf_string("1D t=%d, 30 runs: max |sum P - 1| = %.3e (tol 1e-12)", t1, dev1));
  c.expect(dev2 <= 1e-12, printf_string("2D t=%d, 30 runs: max |sum P - 1| = %.3e (tol 1e-12)", t2, dev2));
}

// 2. Hand-derived small-t distributions.
void small_t(Check& c) {
  const CoinParameter half(0.5);
  const QubitState up(1.0, 0.0);
  const std::map<int, double> expected[] = {
      {{1, 0.5}, {-1, 0.5}},
      {{2, 0.25}, {0, 0.5}, {-2, 0.25}},
      {{3, 0.125}, {1, 0.625}, {-1, 0.125}, {-3, 0.125}},
  };
  for (int t = 1; t <= 3; ++t) {
    const Distribution1D d = distribution_1d(evolve_1d(up, half, {}, t));
    double dev = 0.0;
    for (int x = -t - 2; x <= t + 2; ++x) {
      const auto it = expected[t - 1].find(x);
      dev = std::max(dev, std::abs(d.probability(x) - (it == expected[t - 1].end() ? 0.0 : it->second)));
    }
    c.expect(dev <= 1e-14, printf_string("1D p=1/2 (1,0) t=%d: max deviation %.3e", t, dev));
  }
  const QuditState e1(1.0, 0.0, 0.0, 0.0);
  for (double pv : {0.25, 0.3, 0.5, 0.75}) {
    const CoinParameter p(pv);
    const double q = p.q();
    const Distribution2D d = distribution_2d(evolve_2d(e1, p, {}, 1));
    const std::map<std::pair<int, int>, double> want = {
        {{1, 0}, pv * pv}, {{-1, 0}, pv * q}, {{0, 1}, pv * q}, {{0, -1}, q * q}};
    double dev = 0.0;
    for (int x = -3; x <= 3; ++x) {
      for (int y = -3; y <= 3; ++y) {
        const auto it = want.find({x, y});
        dev = std::max(dev, std::abs(d.probability(x, y) - (it == want.end() ? 0.0 : it->second)));
      }
    }
    c.expect(dev <= 1e-14, printf_string("2D p=%.2f (1,0,0,0) t=1: max deviation %.3e", pv, dev));
  }
}

// 3. Closed form against the difference equations.
void closed_form(Check& c, ValidationScale scale) {
  const int tmax = scale == ValidationScale::kQuick ? 50 : 200;
  Rng rng(kSeed + 3);
  std::vector<QubitState> states;
  for (int s = 0; s < 20; ++s) states.push_back(random_qubit_state(rng));
  for (double pv : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const CoinParameter p(pv);
    const AlphaTable table(p, tmax);
    double dev = 0.0;
    for (std::size_t s = 0; s < states.size(); ++s) {
      const PhaseParameter k{s % 2 == 0 ? 0.0 : 0.37};
      evolve_1d_each(states[s], p, k, tmax, [&](const WaveField1D& f) {
        dev = std::max(dev, field_deviation(f, closed_form_field(states[s], table, k, f.time())));
      });
    }
    c.expect(dev <= 1e-10, printf_string("p=%.2f, 20 states, t<=%d: max amplitude deviation %.3e", pv, tmax, dev));
  }
}

// 4. Explicit double sum against the recurrence.
void coefficient_identity(Check& c) {
  for (double pv : kCoins) {
    const CoinParameter p(pv);
    const AlphaTable table(p, 31);
    double dev = 0.0;
    for (int t = 0; t <= 30; ++t) {
      for (int j = 0; j <= t; ++j) {
        dev = std::max(dev, std::abs(double_sum_coefficient(p, t, j) - table.alpha(t + 1)[t - 2 * j]));
      }
    }
    c.expect(dev <= 1e-12, printf_string("p=%.2f, t<=30, all j: max deviation %.3e", pv, dev));
  }
}

bool stepwise_nonincreasing(const MomentReport& r) {
  for (std::size_t i = 1; i < r.gaps.size(); ++i) {
    if (r.gaps[i] > r.gaps[i - 1]) return false;
  }
  return true;
}

// 5. 1D weak limit.
void weak_limit_1d(Check& c) {
  const QuadratureGrid grid(4096);
  const std::vector<int> ladder = {125, 250, 500, 1000};
  Rng rng(kSeed + 5);
  std::vector<QubitState> states;
  for (int s = 0; s < 5; ++s) states.push_back(random_qubit_state(rng));
  for (double pv : kCoins) {
    const CoinParameter p(pv);
    for (int alpha : {1, 2}) {
      double worst = 0.0;
      int converging = 0;
      for (const QubitState& theta : states) {
        const MomentReport r = convergence_report_1d(theta, p, alpha, ladder, grid);
        worst = std::max(worst, r.gaps.back());
        if (r.converging()) ++converging;
        if (!stepwise_nonincreasing(r)) {
          c.note(printf_string("p=%.2f alpha=%d not step-by-step monotone: gaps %.2e %.2e %.2e %.2e", pv, alpha,
                               r.gaps[0], r.gaps[1], r.gaps[2], r.gaps[3]));
        }
      }
      c.expect(worst <= 5e-3, printf_string("p=%.2f alpha=%d: max gap at t=1000 %.3e (tol 5e-3)", pv, alpha, worst));
      c.expect(converging == 5, printf_string("p=%.2f alpha=%d: gap(t=1000) <= gap(t=125) for %d/5 states", pv,
                                              alpha, converging));
    }
  }
}

// 6. 2D weak limit.
void weak_limit_2d(Check& c) {
  const QuadratureGrid grid(512);
  const CoinParameter half(0.5);
  Rng rng(kSeed + 6);
  const std::vector<std::pair<int, int>> orders = {{1, 0}, {0, 1}, {1, 1}, {2, 0}};
  const std::pair<const char*, QuditState> states[] = {
      {"(1,0,0,0)", QuditState(1.0, 0.0, 0.0, 0.0)},
      {"(1,i,i,-1)/2", phi_perp_pattern_state_2d(0.0, 1)},
      {"random", random_qudit_state(rng)},
  };
  for (const auto& [name, theta] : states) {
    const std::vector<double> limits = limit_moments_2d(theta, half, orders, grid);
    const WaveField2D f = evolve_2d(theta, half, {}, 300);
    for (std::size_t o = 0; o < orders.size(); ++o) {
      const double sim = joint_moment_2d(f, orders[o].first, orders[o].second);
      const double gap = std::abs(sim - limits[o]);
      c.expect(gap <= 2e-2, printf_string("%s (a,b)=(%d,%d): t=300 %.6f quadrature %.6f gap %.3e", name,
                                          orders[o].first, orders[o].second, sim, limits[o], gap));
    }
  }
}

// 7. Expectation coefficient table.
void ab_table(Check& c) {
  const ABTable table = extract_ab(CoinParameter(0.5), 10);
  const double dev = max_table_deviation(table, reference_ab_table());
  c.expect(dev <= 1e-12, printf_string("p=1/2, t=1..10: max deviation from reference %.3e", dev));
  c.expect(kns_check(table), "p=1/2: b_{t+1} - a_t = 1 for t=1..9");
  for (double pv : {0.25, 0.75}) {
    const ABTable other = extract_ab(CoinParameter(pv), 10);
    double worst = 0.0;
    for (int t = 1; t < 10; ++t) worst = std::max(worst, std::abs(other.b_at(t + 1) - other.a_at(t) - 1.0));
    c.note(printf_string("p=%.2f (informational): max |b_{t+1} - a_t - 1| = %.3e", pv, worst));
  }
}

// 8. Sampled symmetry class.
void symmetry_sampled(Check& c) {
  Rng rng(kSeed + 8);
  std::uniform_real_distribution<double> phase(-kPi, kPi);
  for (double pv : kCoins) {
    const CoinParameter p(pv);
    int members = 0, symmetric = 0;
    for (int s = 0; s < 50; ++s) {
      const QubitState theta = phi_perp_state(phase(rng), s % 2 == 0 ? 1 : -1);
      if (!in_phi_perp(theta)) continue;
      ++members;
      if (empirical_symmetric_1d(theta, p, 50)) ++symmetric;
    }
    c.expect(members == 50 && symmetric == members,
             printf_string("1D p=%.2f: %d/%d members symmetric to t=50", pv, symmetric, members));
    c.expect(!empirical_symmetric_1d(QubitState(1.0, 0.0), p, 3),
             printf_string("1D p=%.2f: (1,0) asymmetric by t=3", pv));
  }
  for (double pv : kCoins) {
    const CoinParameter p(pv);
    int members = 0, symmetric = 0;
    for (int s = 0; s < 20; ++s) {
      const QuditState theta = s < 10 ? phi_perp_pattern_state_2d(phase(rng), s % 2 == 0 ? 1 : -1)
                                      : random_phi_perp_state_2d(rng);
      if (!in_phi_perp_2d(theta)) continue;
      ++members;
      if (empirical_symmetric_2d(theta, p, 20)) ++symmetric;
    }
    c.expect(members == 20 && symmetric == members,
             printf_string("2D p=%.2f: %d/%d members symmetric to t=20", pv, symmetric, members));
    c.expect(!empirical_symmetric_2d(QuditState(1.0, 0.0, 0.0, 0.0), p, 3),
             printf_string("2D p=%.2f: (1,0,0,0) asymmetric by t=3", pv));
  }
}

// 9. Reflection identities on the pattern states.
void reflection(Check& c) {
  for (double pv : kCoins) {
    const CoinParameter p(pv);
    double r1 = 0.0, r2 = 0.0;
    for (int sign : {1, -1}) {
      for (double gamma : {0.0, 0.9, -2.1}) {
        const QubitState th1 = phi_perp_state(gamma, sign);
        for (int t = 0; t <= 20; ++t) r1 = std::max(r1, reflection_identity_1d(th1, p, t));
        const QuditState th2 = phi_perp_pattern_state_2d(gamma, sign);
        for (int t = 0; t <= 10; ++t) r2 = std::max(r2, reflection_identity_2d(th2, p, t));
      }
    }
    c.expect(r1 <= 1e-12, printf_string("1D p=%.2f, t<=20: max residual %.3e", pv, r1));
    c.expect(r2 <= 1e-12, printf_string("2D p=%.2f, t<=10: max residual %.3e", pv, r2));
  }
}

void check_estimate(Check& c, const DeltaIntensityEstimate& e, const std::string& label) {
  bool ratios = true;
  std::string ratio_text;
  for (std::size_t i = 1; i < e.averages.size(); ++i) {
    const double r = e.averages[i] / e.averages[i - 1];
    if (!(r >= 0.3 && r <= 0.8)) ratios = false;
    ratio_text += printf_string(" %.3f", r);
  }
  std::string avg_text;
  for (double a : e.averages) avg_text += printf_string(" %.4e", a);
  c.expect(e.decaying && !localization_verdict(e) && ratios,
           label + ": averages" + avg_text + ", ratios" + ratio_text);
}

// 10. No localization at the origin.
void localization_probes(Check& c) {
  Rng rng(kSeed + 10);
  const double r2 = 1.0 / std::sqrt(2.0);
  std::vector<std::pair<std::string, QubitState>> s1 = {
      {"(1,0)", QubitState(1.0, 0.0)},
      {"(1,i)/sqrt2", QubitState(r2, Complex(0.0, r2))},
      {"(1,1)/sqrt2", QubitState(r2, r2)},
  };
  s1.emplace_back("random A", random_qubit_state(rng));
  s1.emplace_back("random B", random_qubit_state(rng));
  std::vector<std::pair<std::string, QuditState>> s2 = {
      {"(1,0,0,0)", QuditState(1.0, 0.0, 0.0, 0.0)},
      {"(1,i,i,-1)/2", phi_perp_pattern_state_2d(0.0, 1)},
  };
  s2.emplace_back("random", random_qudit_state(rng));
  for (double pv : kCoins) {
    const CoinParameter p(pv);
    for (const auto& [name, theta] : s1) {
      check_estimate(c, time_averaged_probability_1d(theta, p, 0, {64, 128, 256}),
                     printf_string("1D p=%.2f ", pv) + name);
    }
    for (const auto& [name, theta] : s2) {
      check_estimate(c, time_averaged_probability_2d(theta, p, 0, 0, {32, 64, 128}),
                     printf_string("2D p=%.2f ", pv) + name);
    }
  }
}

// 11. Grid refinement leaves the 1D limit unchanged.
void quadrature_stability(Check& c) {
  const QuadratureGrid coarse(1024), fine(4096);
  Rng rng(kSeed + 11);
  std::vector<QubitState> states = {QubitState(1.0, 0.0)};
  for (int s = 0; s < 5; ++s) states.push_back(random_qubit_state(rng));
  for (double pv : kCoins) {
    const CoinParameter p(pv);
    double dev = 0.0;
    for (int alpha : {1, 2}) {
      for (const QubitState& theta : states) {
        dev = std::max(dev, std::abs(limit_moment_1d(theta, p, alpha, coarse) - limit_moment_1d(theta, p, alpha, fine)));
      }
    }
    c.expect(dev <= 1e-10, printf_string("p=%.2f, alpha in {1,2}, 6 states: |N=1024 - N=4096| = %.3e", pv, dev));
  }
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> list = {
      {1, "walk", "normalization at long times", true},
      {2, "walk", "hand-derived small-t distributions", true},
      {3, "closedform", "closed form matches evolution", true},
      {4, "closedform", "double-sum coefficient identity", true},
      {5, "spectral", "1D weak limit moments", false},
      {6, "spectral", "2D weak limit moments", false},
      {7, "symmetry", "expectation coefficient table", true},
      {8, "symmetry", "sampled symmetric class", true},
      {9, "symmetry", "reflection identities", true},
      {10, "localization", "origin Cesaro averages decay", false},
      {11, "spectral", "quadrature grid stability", true},
  };
  return list;
}

std::vector<int> select_criteria(const std::string& only) {
  std::vector<int> out;
  for (const CriterionInfo& info : acceptance_criteria()) {
    if (only.empty() || only == info.group || only == std::to_string(info.number)) out.push_back(info.number);
  }
  if (out.empty()) throw InvalidParameter("unknown criterion selector '" + only + "'");
  return out;
}

CriterionOutcome run_criterion(int number, ValidationScale scale) {
  const auto& list = acceptance_criteria();
  const auto info = std::find_if(list.begin(), list.end(), [&](const CriterionInfo& i) { return i.number == number; });
  if (info == list.end()) throw InvalidParameter("no criterion " + std::to_string(number));
  CriterionOutcome out;
  out.number = number;
  if (scale == ValidationScale::kQuick && !info->in_quick) {
    out.status = CriterionStatus::kSkip;
    out.details.push_back("     not part of the quick scale");
    return out;
  }
  const bool full = scale == ValidationScale::kFull;
  Check c{out};
  const auto start = std::chrono::steady_clock::now();
  double budget = 0.0;  // seconds; 0 means none
  switch (number) {
    case 1: unitarity(c, scale); budget = 30.0; break;
    case 2: small_t(c); break;
    case 3: closed_form(c, scale); budget = 60.0; break;
    case 4: coefficient_identity(c); break;
    case 5: weak_limit_1d(c); budget = 60.0; break;
    case 6: weak_limit_2d(c); budget = 300.0; break;
    case 7: ab_table(c); break;
    case 8: symmetry_sampled(c); break;
    case 9: reflection(c); break;
    case 10: localization_probes(c); break;
    case 11: quadrature_stability(c); break;
    default: break;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (full && budget > 0.0) {
    c.expect(out.seconds < budget, printf_string("runtime %.1f s (limit %.0f s)", out.seconds, budget));
  }
  out.status = c.ok ? CriterionStatus::kPass : CriterionStatus::kFail;
  return out;
}

std::string outcome_line(const CriterionOutcome& outcome) {
  const auto& list = acceptance_criteria();
  const CriterionInfo& info = list.at(static_cast<std::size_t>(outcome.number - 1));
  const char* tag = outcome.status == CriterionStatus::kPass   ? "PASS"
                    : outcome.status == CriterionStatus::kFail ? "FAIL"
                                                               : "SKIP";
  return printf_string("%s [%d] %s: %s (%.2f s)", tag, info.number, info.group, info.title, outcome.seconds);
}

std::vector<CriterionOutcome> run_acceptance(const std::vector<int>& numbers, ValidationScale scale,
                                             std::ostream& out) {
  std::vector<CriterionOutcome> outcomes;
  for (int n : numbers) {
    outcomes.push_back(run_criterion(n, scale));
    out << outcome_line(outcomes.back()) << '\n';
    for (const std::string& d : outcomes.back().details) out << "    " << d << '\n';
    out.flush();
  }
  int failed = 0;
  for (const auto& o : outcomes) failed += o.status == CriterionStatus::kFail;
  out << printf_string("%zu criteria run, %d failed\n", outcomes.size(), failed);
  return outcomes;
}

bool all_passed(const std::vector<CriterionOutcome>& outcomes) {
  return std::none_of(outcomes.begin(), outcomes.end(),
                      [](const CriterionOutcome& o) { return o.status == CriterionStatus::kFail; });
}

}  // namespace qwalk
