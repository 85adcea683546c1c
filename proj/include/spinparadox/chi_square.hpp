#pragma once

#include <cstdint>
#include <span>

namespace spinparadox {

struct ChiSquareResult {
  double statistic;
  int degrees;
  double critical_value;
  bool pass;
};

/// Critical value of the chi-square distribution at upper-tail probability
/// 0.001. Degrees 1..10 come from the standard table; larger values are
/// computed with Boost.Math.
double chi_square_critical_0001(int degrees);

/// Pearson goodness-of-fit test at significance 0.001.
///
/// Bins whose expected count is below 5 are pooled into one bin; if the pool
/// itself stays below 5 it is folded into the smallest remaining bin.
/// Observations in a bin of zero expected probability fail outright.
/// Throws std::invalid_argument on zero shots, mismatched bins, observed
/// counts not summing to shots, or expected probabilities not summing to 1.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed, std::span<const double> expected,
                               std::uint64_t shots);

}  // namespace spinparadox
