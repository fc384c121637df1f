#include "dronecover/interval_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dronecover {

IntervalInstance::IntervalInstance(std::vector<WeightedInterval> items,
                                   double length, std::uint32_t budget)
    : items_(std::move(items)), length_(length), budget_(budget) {
  if (!std::isfinite(length) || length <= 0.0) {
    throw std::invalid_argument("interval length must be positive");
  }
  for (const WeightedInterval& it : items_) {
    if (!std::isfinite(it.left)) {
      throw std::invalid_argument("interval endpoint must be finite");
    }
    if (!std::isfinite(it.weight) || it.weight < 0.0) {
      throw std::invalid_argument("interval weight must be non-negative");
    }
  }
  std::stable_sort(items_.begin(), items_.end(),
                   [](const WeightedInterval& a, const WeightedInterval& b) {
                     return a.left < b.left;
                   });
  prefix_.resize(items_.size() + 1, 0.0);
  for (std::size_t i = 0; i < items_.size(); ++i) {
    prefix_[i + 1] = prefix_[i] + items_[i].weight;
  }
}

Neighborhood neighborhood_query(const IntervalInstance& instance,
                                std::size_t j) {
  if (j < 1 || j > instance.size()) {
    throw std::out_of_range("neighborhood_query: index out of range");
  }
  const auto items = instance.items();
  const double p = items[j - 1].left;
  const double len = instance.length();
  // First position in [0, j) whose interval still reaches p.
  const auto first = std::partition_point(
      items.begin(), items.begin() + static_cast<std::ptrdiff_t>(j),
      [&](const WeightedInterval& it) { return p - it.left > len; });
  const auto lo = static_cast<std::size_t>(first - items.begin());
  return Neighborhood{j - lo,
                      instance.prefix_weight(j) - instance.prefix_weight(lo)};
}

PiercingSolution solve_mwpihp(const IntervalInstance& instance) {
  const std::size_t n = instance.size();
  // Budget beyond n adds nothing.
  const std::size_t m = std::min<std::size_t>(instance.budget(), n);
  if (n == 0 || m == 0) return {};

  std::vector<Neighborhood> hood(n + 1);
  for (std::size_t j = 1; j <= n; ++j) hood[j] = neighborhood_query(instance, j);

  const std::size_t cols = m + 1;
  std::vector<double> table((n + 1) * cols, 0.0);
  std::vector<bool> pierce((n + 1) * cols, false);
  const auto at = [cols](std::size_t j, std::size_t k) { return j * cols + k; };

  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 1; k <= m; ++k) {
      const double skip = table[at(j - 1, k)];
      const double take = table[at(j - hood[j].count, k - 1)] + hood[j].weight;
      if (take > skip) {
        table[at(j, k)] = take;
        pierce[at(j, k)] = true;
      } else {
        table[at(j, k)] = skip;
      }
    }
  }

  PiercingSolution out;
  out.best_weight = table[at(n, m)];
  const auto items = instance.items();
  std::size_t j = n;
  std::size_t k = m;
  while (j > 0 && k > 0) {
    if (pierce[at(j, k)]) {
      out.points.push_back(items[j - 1].left);
      j -= hood[j].count;
      --k;
    } else {
      --j;
    }
  }
  std::reverse(out.points.begin(), out.points.end());
  return out;
}

double pierced_weight(const IntervalInstance& instance,
                      std::span<const double> points) {
  double total = 0.0;
  for (const WeightedInterval& it : instance.items()) {
    const bool hit = std::any_of(points.begin(), points.end(), [&](double p) {
      return pierces(it.left, instance.length(), p);
    });
    if (hit) total += it.weight;
  }
  return total;
}

UpperBound upper_bound_2d(std::span<const Point> points,
                          const GridConfig& config) {
  std::vector<WeightedInterval> xs;
  std::vector<WeightedInterval> ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const Point& p : points) {
    xs.push_back(WeightedInterval{p.x, p.w});
    ys.push_back(WeightedInterval{p.y, p.w});
  }
  const double length = 2.0 * config.r_cov;
  UpperBound out;
  out.bound_x =
      solve_mwpihp(IntervalInstance(std::move(xs), length, config.m))
          .best_weight;
  out.bound_y =
      solve_mwpihp(IntervalInstance(std::move(ys), length, config.m))
          .best_weight;
  out.bound = std::min(out.bound_x, out.bound_y);
  return out;
}

UpperBound upper_bound_2d(const CellStore& store, const GridConfig& config) {
  const std::vector<Point> points = store.points();
  return upper_bound_2d(points, config);
}

}  // namespace dronecover
