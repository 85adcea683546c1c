#include "spinparadox/chi_square.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace spinparadox {

namespace {

constexpr double kMinExpectedCount = 5.0;

constexpr std::array<double, 10> kCritical0001 = {
    10.828, 13.816, 16.266, 18.467, 20.515, 22.458, 24.322, 26.124, 27.877, 29.588,
};

struct Bin {
  double observed;
  double expected;
};

}  // namespace

double chi_square_critical_0001(int degrees) {
  if (degrees < 1) throw std::invalid_argument("chi-square needs at least one degree of freedom");
  if (degrees <= static_cast<int>(kCritical0001.size())) return kCritical0001[degrees - 1];
  boost::math::chi_squared dist(degrees);
  return boost::math::quantile(boost::math::complement(dist, 0.001));
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed, std::span<const double> expected,
                               std::uint64_t shots) {
  if (shots == 0) throw std::invalid_argument("chi-square test needs at least one shot");
  if (observed.size() != expected.size() || observed.empty()) {
    throw std::invalid_argument("observed and expected bins do not match");
  }
  const std::uint64_t total = std::accumulate(observed.begin(), observed.end(), std::uint64_t{0});
  if (total != shots) throw std::invalid_argument("observed counts do not sum to shots");
  const double p_sum = std::accumulate(expected.begin(), expected.end(), 0.0);
  if (std::abs(p_sum - 1.0) > 1e-9) throw std::invalid_argument("expected probabilities do not sum to 1");

  const double n = static_cast<double>(shots);
  std::vector<Bin> bins;
  Bin pool{0.0, 0.0};
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] < 0.0) throw std::invalid_argument("negative expected probability");
    if (expected[i] == 0.0 && observed[i] > 0) {
      return {std::numeric_limits<double>::infinity(), 0, 0.0, false};
    }
    const Bin b{static_cast<double>(observed[i]), expected[i] * n};
    if (b.expected < kMinExpectedCount) {
      pool.observed += b.observed;
      pool.expected += b.expected;
    } else {
      bins.push_back(b);
    }
  }
  if (pool.expected >= kMinExpectedCount || bins.empty()) {
    if (pool.expected > 0.0) bins.push_back(pool);
  } else if (pool.expected > 0.0 || pool.observed > 0.0) {
    auto smallest = std::min_element(bins.begin(), bins.end(),
                                     [](const Bin& a, const Bin& b) { return a.expected < b.expected; });
    smallest->observed += pool.observed;
    smallest->expected += pool.expected;
  }

  const int degrees = static_cast<int>(bins.size()) - 1;
  if (degrees < 1) return {0.0, 0, 0.0, true};
  double statistic = 0.0;
  for (const auto& b : bins) statistic += (b.observed - b.expected) * (b.observed - b.expected) / b.expected;
  const double critical = chi_square_critical_0001(degrees);
  return {statistic, degrees, critical, statistic < critical};
}

}  // namespace spinparadox
