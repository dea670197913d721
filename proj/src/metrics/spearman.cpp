#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "venuescope/metrics.hpp"

namespace venuescope {

std::vector<double> average_ranks(std::span<const double> values) {
  const auto n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // positions i..j-1 share the mean of 1-based ranks i+1..j
    const double rank = static_cast<double>(i + 1 + j) / 2.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

std::optional<double> spearman_rho(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("spearman_rho: length mismatch");
  if (xs.size() < 2) throw std::invalid_argument("spearman_rho: needs at least two observations");
  auto is_nan = [](double v) { return std::isnan(v); };
  if (std::any_of(xs.begin(), xs.end(), is_nan) || std::any_of(ys.begin(), ys.end(), is_nan))
    throw std::invalid_argument("spearman_rho: NaN input");

  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  // Average ranks always have mean (n + 1) / 2.
  const double mean = static_cast<double>(xs.size() + 1) / 2.0;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace venuescope
