#pragma once

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/walk1d.hpp"
#include "qwalk/walk2d.hpp"

namespace qwalk {

// Cesaro averages (1/T) sum_{t=1..T} P(site, t) along a ladder of horizons.
// A positive limit of this average is the weight of a point mass at the
// site in the stationary distribution.
struct DeltaIntensityEstimate {
  int dimension = 1;
  int x = 0;
  int y = 0;  // unused in 1D
  std::vector<int> horizons;
  std::vector<double> averages;
  bool decaying = false;  // averages strictly decreasing along the ladder
};

inline constexpr double kDefaultLocalizationThreshold = 0.01;

// Ladder must be strictly increasing with every horizon >= 8. All t
// contribute, including parity-forbidden times where P(site, t) = 0.
DeltaIntensityEstimate time_averaged_probability_1d(const QubitState& theta, const CoinParameter& p, int site,
                                                    const std::vector<int>& ladder);
DeltaIntensityEstimate time_averaged_probability_2d(const QuditState& theta, const CoinParameter& p, int x, int y,
                                                    const std::vector<int>& ladder);

// Localized iff the final average is >= epsilon and the ladder is not
// decaying. Needs at least three horizons.
bool localization_verdict(const DeltaIntensityEstimate& estimate, double epsilon = kDefaultLocalizationThreshold);

}  // namespace qwalk
