#pragma once

#include <optional>
#include <set>

#include <absl/container/btree_map.h>
#include <absl/container/btree_set.h>
#include <span>
#include <string>
#include <variant>

#include "dronecover/cell_store.hpp"
#include "dronecover/placement.hpp"

namespace dronecover {

struct InsertEvent {
  Point point;
  friend bool operator==(const InsertEvent&, const InsertEvent&) = default;
};

struct DeleteEvent {
  PointId id = 0;
  friend bool operator==(const DeleteEvent&, const DeleteEvent&) = default;
};

struct UpdateEvent {
  PointId id = 0;
  double w = 0.0;
  friend bool operator==(const UpdateEvent&, const UpdateEvent&) = default;
};

using Event = std::variant<InsertEvent, DeleteEvent, UpdateEvent>;

/// What one event did to the drone assignment. At most one drone moves:
/// vacated only means it parked, occupied only means it left the park.
struct SwapReport {
  bool moved = false;
  std::optional<CellKey> vacated;
  std::optional<CellKey> occupied;
  std::optional<DroneId> drone;
  double covered_weight_after = 0.0;
};

/// Keeps m drones on the m heaviest non-empty cells while points are
/// inserted, deleted and reweighted.
///
/// Every live cell sits in exactly one of two ordered sets: `covered` (has a
/// drone) or `uncovered`. Both are ordered by RankOrder, so the lightest
/// covered cell is the last element of `covered` and the heaviest uncovered
/// cell is the first element of `uncovered`. `assignment` maps covered cells
/// to their drone. After every event
///
///   |covered| = min(m, #cells),  |covered| + |parked| = m,
///   weight(min covered) >= weight(max uncovered),
///
/// so the covered weight equals the best m-cell total. One event changes one
/// cell's weight, so restoring this takes at most one drone move.
class CoverageState {
 public:
  /// Places drones with static_place. Throws DuplicateKeyError on repeated
  /// ids and std::invalid_argument on invalid points.
  static CoverageState build(std::span<const Point> points,
                             const GridConfig& config);

  explicit CoverageState(const GridConfig& config);

  /// Applies one event. A precondition violation (duplicate insert, unknown
  /// id, invalid weight or coordinates) throws before any state changes.
  /// Cost: O(log n) for the structures plus O(m) to total the report.
  SwapReport apply(const Event& event);

  double covered_weight() const;

  /// One slot per drone in ordinal order; parked drones have no geometry.
  Placement placements() const;

  std::optional<RankedCell> min_covered() const;
  std::optional<RankedCell> max_uncovered() const;

  const CellStore& store() const noexcept { return store_; }
  const GridConfig& config() const noexcept { return config_; }

  const absl::btree_set<RankedCell, RankOrder>& covered() const noexcept {
    return covered_;
  }
  const absl::btree_set<RankedCell, RankOrder>& uncovered() const noexcept {
    return uncovered_;
  }
  std::optional<DroneId> drone_at(CellKey key) const;
  std::size_t parked_count() const noexcept { return parked_.size(); }

  /// Empty when every structural invariant holds, otherwise a description
  /// of the first violation found. O(n log n); meant for tests.
  std::string invariant_violation() const;

 private:
  void revise(const CellChange& change, SwapReport& report);
  void occupy(const RankedCell& cell, DroneId drone);
  void restore(SwapReport& report);

  GridConfig config_;
  CellStore store_;
  absl::btree_set<RankedCell, RankOrder> covered_;
  absl::btree_set<RankedCell, RankOrder> uncovered_;
  absl::btree_map<CellKey, DroneId> assignment_;
  std::set<DroneId> parked_;
};

}  // namespace dronecover
