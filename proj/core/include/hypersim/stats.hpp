#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace hypersim {

struct ChiSquareResult {
  double statistic;
  std::size_t degrees_of_freedom;
  double p_value;
};

/// Pearson goodness-of-fit of `observed` counts against `expected`
/// probabilities. Bins with zero expected probability are dropped from the
/// statistic; a count landing in one makes the statistic infinite.
ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed,
                                std::span<const double> expected);

}  // namespace hypersim
