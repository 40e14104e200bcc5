#include "qwalk/localization.hpp"

#include <cstddef>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void check_ladder(const std::vector<int>& ladder) {
  if (ladder.empty()) throw PreconditionError("localization ladder must not be empty");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (ladder[i] < 8) throw PreconditionError("localization horizons must be >= 8");
    if (i > 0 && ladder[i] <= ladder[i - 1]) throw PreconditionError("localization ladder must be strictly increasing");
  }
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return v.size() >= 2;
}

// Accumulates P(site, t) for t = 1..T and records the running mean at each
// ladder horizon.
class CesaroAccumulator {
 public:
  explicit CesaroAccumulator(const std::vector<int>& ladder) : ladder_(ladder) {}

  void add(int t, double probability) {
    if (t == 0) return;
    sum_ += probability;
    if (next_ < ladder_.size() && t == ladder_[next_]) {
      averages_.push_back(sum_ / t);
      ++next_;
    }
  }
  std::vector<double> take() { return std::move(averages_); }

 private:
  const std::vector<int>& ladder_;
  std::size_t next_ = 0;
  double sum_ = 0.0;
  std::vector<double> averages_;
};

}  // namespace

DeltaIntensityEstimate time_averaged_probability_1d(const QubitState& theta, const CoinParameter& p, int site,
                                                    const std::vector<int>& ladder) {
  check_ladder(ladder);
  CesaroAccumulator acc(ladder);
  evolve_1d_each(theta, p, {}, ladder.back(),
                 [&](const WaveField1D& f) { acc.add(f.time(), f.amplitude(site).squaredNorm()); });
  DeltaIntensityEstimate e;
  e.dimension = 1;
  e.x = site;
  e.horizons = ladder;
  e.averages = acc.take();
  e.decaying = strictly_decreasing(e.averages);
  return e;
}

DeltaIntensityEstimate time_averaged_probability_2d(const QuditState& theta, const CoinParameter& p, int x, int y,
                                                    const std::vector<int>& ladder) {
  check_ladder(ladder);
  CesaroAccumulator acc(ladder);
  evolve_2d_each(theta, p, {}, ladder.back(),
                 [&](const WaveField2D& f) { acc.add(f.time(), f.amplitude(x, y).squaredNorm()); });
  DeltaIntensityEstimate e;
  e.dimension = 2;
  e.x = x;
  e.y = y;
  e.horizons = ladder;
  e.averages = acc.take();
  e.decaying = strictly_decreasing(e.averages);
  return e;
}

bool localization_verdict(const DeltaIntensityEstimate& estimate, double epsilon) {
  if (estimate.averages.size() < 3) throw PreconditionError("localization verdict needs at least three horizons");
  return estimate.averages.back() >= epsilon && !estimate.decaying;
}

}  // namespace qwalk
