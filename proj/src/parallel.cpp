#include "qwalk/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qwalk {

unsigned worker_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QWALK_THREADS")) {
    try {
      const long requested = std::stol(env);
      if (requested > 0) return std::min<unsigned>(hw, static_cast<unsigned>(requested));
    } catch (const std::exception&) {
      // unparsable value: fall through to the default
    }
  }
  return hw;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (end <= begin) return;
  const std::size_t n = end - begin;
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  // Tiny loops are not worth a thread launch.
  if (workers <= 1 || n < 64) {
    body(begin, end);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  body(begin, std::min(end, begin + chunk));
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 8;
  if (values.size() <= kLeaf) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace qwalk
