#include "plclique/stats.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

#include "plclique/errors.hpp"

namespace plclique {

ScalingFit fit_loglog_slope(std::span<const std::pair<double, double>> points) {
  detail::require(points.size() >= 3, "a scaling fit needs at least 3 points");
  const auto k = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(k, 2);
  Eigen::VectorXd response(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto [x, y] = points[static_cast<std::size_t>(i)];
    detail::require(x > 0.0, "scaling fit needs positive n");
    detail::require(y > 0.0, "scaling fit needs positive statistics");
    design(i, 0) = 1.0;
    design(i, 1) = std::log(x);
    response[i] = std::log(y);
  }
  const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(response);
  const Eigen::VectorXd residual = response - design * beta;
  const double ssr = residual.squaredNorm();
  const double sst = (response.array() - response.mean()).square().sum();
  const double sxx = (design.col(1).array() - design.col(1).mean()).square().sum();
  detail::require(sxx > 0.0, "scaling fit needs at least two distinct n");

  ScalingFit fit;
  fit.intercept = beta[0];
  fit.slope = beta[1];
  fit.slope_stderr = std::sqrt(ssr / static_cast<double>(k - 2) / sxx);
  fit.r_squared = sst > 0.0 ? 1.0 - ssr / sst : 1.0;
  fit.points_used = points.size();
  return fit;
}

GofResult poisson_gof(std::span<const std::uint64_t> counts, double rate) {
  detail::require(!counts.empty(), "goodness-of-fit needs at least one count");
  detail::require(std::isfinite(rate) && rate > 0.0, "Poisson rate must be positive");
  const boost::math::poisson_distribution<double> law(rate);
  const double total = static_cast<double>(counts.size());
  constexpr double min_expected = 5.0;

  std::uint64_t max_count = *std::max_element(counts.begin(), counts.end());
  std::vector<std::uint64_t> hist(max_count + 1, 0);
  for (auto c : counts) ++hist[c];
  auto observed_at = [&](std::uint64_t k) { return k < hist.size() ? double(hist[k]) : 0.0; };
  auto observed_from = [&](std::uint64_t k) {
    double s = 0.0;
    for (std::uint64_t j = k; j < hist.size(); ++j) s += double(hist[j]);
    return s;
  };

  std::vector<std::pair<double, double>> cells;  // (observed, expected)
  double acc_obs = 0.0, acc_exp = 0.0;
  std::uint64_t k = 0;
  // Extend while the tail beyond k can still fill a cell by itself.
  while (total * boost::math::cdf(boost::math::complement(law, double(k))) >= min_expected) {
    acc_obs += observed_at(k);
    acc_exp += total * boost::math::pdf(law, double(k));
    if (acc_exp >= min_expected) {
      cells.emplace_back(acc_obs, acc_exp);
      acc_obs = acc_exp = 0.0;
    }
    ++k;
  }
  const double tail_p = k == 0 ? 1.0 : boost::math::cdf(boost::math::complement(law, double(k - 1)));
  acc_obs += observed_from(k);
  acc_exp += total * tail_p;
  if (acc_exp < min_expected && !cells.empty()) {
    cells.back().first += acc_obs;
    cells.back().second += acc_exp;
  } else {
    cells.emplace_back(acc_obs, acc_exp);
  }
  if (cells.size() < 2)
    throw ValidationError("degenerate binning: fewer than two cells with expected count >= 5");

  GofResult out;
  for (const auto& [obs, exp] : cells) out.chi_square += (obs - exp) * (obs - exp) / exp;
  out.cells = cells.size();
  out.degrees_of_freedom = cells.size() - 1;
  const boost::math::chi_squared_distribution<double> chi2(static_cast<double>(out.degrees_of_freedom));
  out.p_value = boost::math::cdf(boost::math::complement(chi2, out.chi_square));
  return out;
}

double quantile(std::vector<double> values, double q) {
  detail::require(!values.empty(), "quantile of an empty sample");
  detail::require(q >= 0.0 && q <= 1.0, "quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

}  // namespace plclique
