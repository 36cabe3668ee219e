#include "hypersim/stats.hpp"

#include <limits>

#include <boost/math/distributions/chi_squared.hpp>

#include "hypersim/error.hpp"

namespace hypersim {

ChiSquareResult chi_square_test(std::span<const std::uint64_t> observed,
                                std::span<const double> expected) {
  if (observed.size() != expected.size()) throw DomainError("bin count mismatch");
  std::uint64_t total = 0;
  for (auto c : observed) total += c;

  double statistic = 0.0;
  std::size_t bins = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = expected[i] * static_cast<double>(total);
    if (e <= 0.0) {
      if (observed[i] > 0) statistic = std::numeric_limits<double>::infinity();
      continue;
    }
    const double diff = static_cast<double>(observed[i]) - e;
    statistic += diff * diff / e;
    ++bins;
  }
  if (bins < 2) return {statistic, 0, statistic == 0.0 ? 1.0 : 0.0};

  const std::size_t dof = bins - 1;
  double p = 0.0;
  if (std::isfinite(statistic)) {
    boost::math::chi_squared dist(static_cast<double>(dof));
    p = boost::math::cdf(boost::math::complement(dist, statistic));
  }
  return {statistic, dof, p};
}

}  // namespace hypersim
