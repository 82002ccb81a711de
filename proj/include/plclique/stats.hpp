#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace plclique {

/// OLS fit of ln(statistic) on ln(n).
struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double r_squared = 0.0;
  std::size_t points_used = 0;
};

/// Needs at least three points with positive n and statistic.
ScalingFit fit_loglog_slope(std::span<const std::pair<double, double>> points);

struct GofResult {
  double chi_square = 0.0;
  double p_value = 0.0;
  std::size_t cells = 0;
  std::size_t degrees_of_freedom = 0;
};

/// Pearson chi-square test of counts against Po(rate). Adjacent cells are
/// merged until every expected count is at least 5; the last cell is the
/// upper tail.
GofResult poisson_gof(std::span<const std::uint64_t> counts, double rate);

/// Linear-interpolation quantile (the "type 7" definition), q in [0, 1].
double quantile(std::vector<double> values, double q);
inline double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

}  // namespace plclique
