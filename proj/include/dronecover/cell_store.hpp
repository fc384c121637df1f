#pragma once

#include <cstddef>
#include <map>

#include <absl/container/btree_map.h>
#include <utility>
#include <vector>

#include "dronecover/geometry.hpp"

namespace dronecover {

/// Per-cell totals. Only cells with at least one member point are stored.
struct CellAggregate {
  double weight = 0.0;
  std::size_t count = 0;
  CellIndex index;
};

/// Outcome of a store mutation, as seen by the cell it touched.
struct CellChange {
  CellKey key;
  CellIndex index;
  bool existed_before = false;
  bool exists_after = false;
  double weight_before = 0.0;
  /// 0 when the cell was evicted.
  double weight_after = 0.0;
  /// weight_after - weight_before as applied to the aggregate.
  double delta = 0.0;
};

/// Point repository keyed by id, plus per-cell weight aggregation on a fixed
/// grid. Every mutation touches exactly one cell and costs O(log n).
///
/// Aggregates are maintained incrementally; recompute() rebuilds them from
/// the surviving points.
class CellStore {
 public:
  explicit CellStore(double cell_size);

  double cell_size() const noexcept { return cell_size_; }

  /// Throws DuplicateKeyError for a known id and std::invalid_argument for a
  /// non-finite location or a negative/non-finite weight. The store is left
  /// unchanged on error.
  CellChange insert_point(const Point& p);

  /// Throws NotFoundError for an unknown id.
  CellChange delete_point(PointId id);

  /// Replaces the point's weight; the aggregate moves by w_new - w_old.
  CellChange update_weight(PointId id, double w_new);

  double cell_weight(CellKey key) const;
  const CellAggregate* find_cell(CellKey key) const;
  const Point* find_point(PointId id) const;
  bool contains(PointId id) const { return points_.contains(id); }

  /// Live cells in ascending key order.
  std::vector<std::pair<CellKey, CellAggregate>> nonempty_cells() const;

  const absl::btree_map<CellKey, CellAggregate>& cells() const noexcept {
    return cells_;
  }

  std::vector<Point> points() const;

  std::size_t point_count() const noexcept { return points_.size(); }
  std::size_t cell_count() const noexcept { return cells_.size(); }

  CellKey key_of(double x, double y) const;

  /// Aggregates summed from scratch over the stored points, in id order.
  std::map<CellKey, CellAggregate> recomputed_cells() const;

  /// Replaces the incremental aggregates with recomputed_cells().
  void recompute();

 private:
  struct Entry {
    Point point;
    CellKey key;
  };

  double cell_size_;
  absl::btree_map<PointId, Entry> points_;
  absl::btree_map<CellKey, CellAggregate> cells_;
};

/// Throws std::invalid_argument unless w is finite and non-negative.
void validate_weight(double w);

}  // namespace dronecover
