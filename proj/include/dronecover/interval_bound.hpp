#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dronecover/cell_store.hpp"
#include "dronecover/geometry.hpp"

namespace dronecover {

/// Closed interval [left, left + length] carrying a weight.
struct WeightedInterval {
  double left = 0.0;
  double weight = 0.0;
};

/// A point p pierces [left, left + length] iff left <= p and p - left <= length.
constexpr bool pierces(double left, double length, double p) noexcept {
  return left <= p && p - left <= length;
}

/// Equal-length weighted intervals sorted by left endpoint (stable), with a
/// budget of piercing points.
class IntervalInstance {
 public:
  /// Throws std::invalid_argument for a non-positive length, a non-finite
  /// endpoint, or a negative weight.
  IntervalInstance(std::vector<WeightedInterval> items, double length,
                   std::uint32_t budget);

  std::span<const WeightedInterval> items() const noexcept { return items_; }
  double length() const noexcept { return length_; }
  std::uint32_t budget() const noexcept { return budget_; }
  std::size_t size() const noexcept { return items_.size(); }

  /// Sum of the first j weights in sorted order.
  double prefix_weight(std::size_t j) const noexcept { return prefix_[j]; }

 private:
  std::vector<WeightedInterval> items_;
  std::vector<double> prefix_;
  double length_;
  std::uint32_t budget_;
};

struct Neighborhood {
  std::size_t count = 0;
  double weight = 0.0;
};

/// For the 1-based position j: among items 1..j, the count and weight of
/// those pierced by a point at l_j. They form a contiguous suffix of 1..j,
/// located by binary search; the weight is a prefix-sum difference.
/// Throws std::out_of_range unless 1 <= j <= n.
Neighborhood neighborhood_query(const IntervalInstance& instance,
                                std::size_t j);

struct PiercingSolution {
  double best_weight = 0.0;
  /// Chosen piercing points, all left endpoints, ascending.
  std::vector<double> points;
};

/// Maximum weight pierceable by at most `budget` points. With intervals
/// sorted by left endpoint,
///
///   F(j, 0) = 0
///   F(j, k) = max(F(j-1, k), F(j-N_j, k-1) + W_j)
///
/// where (N_j, W_j) = neighborhood_query(j). O(m n log n).
PiercingSolution solve_mwpihp(const IntervalInstance& instance);

/// Union weight of the intervals pierced by any of `points`.
double pierced_weight(const IntervalInstance& instance,
                      std::span<const double> points);

struct UpperBound {
  double bound_x = 0.0;
  double bound_y = 0.0;
  /// min(bound_x, bound_y).
  double bound = 0.0;
};

/// Projects the points onto each axis as intervals of length 2 r_cov and
/// solves the 1D problem per axis with budget m. Each axis value bounds the
/// best 2D coverage by m shapes of radius r_cov from above.
UpperBound upper_bound_2d(std::span<const Point> points,
                          const GridConfig& config);
UpperBound upper_bound_2d(const CellStore& store, const GridConfig& config);

}  // namespace dronecover
