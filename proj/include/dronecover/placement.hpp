#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dronecover/cell_store.hpp"
#include "dronecover/geometry.hpp"

namespace dronecover {

using DroneId = std::uint32_t;

struct SquareGeometry {
  Coord min_corner;
  double side = 0.0;

  bool contains(Coord p) const noexcept {
    return p.x >= min_corner.x && p.x - min_corner.x <= side &&
           p.y >= min_corner.y && p.y - min_corner.y <= side;
  }
};

struct DiskGeometry {
  Coord center;
  double radius = 0.0;

  bool contains(Coord p) const noexcept {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    return dx * dx + dy * dy <= radius * radius;
  }
};

using ShapeGeometry = std::variant<SquareGeometry, DiskGeometry>;

/// Square: the cell itself. Disk: radius r_cov about the cell center, which
/// circumscribes the cell.
ShapeGeometry cell_geometry(CellIndex ci, const GridConfig& config);

/// A cell as ranked for drone assignment.
struct RankedCell {
  double weight = 0.0;
  CellKey key;

  friend bool operator==(const RankedCell&, const RankedCell&) = default;
};

/// Heavier first; equal weights fall back to ascending key.
struct RankOrder {
  bool operator()(const RankedCell& lhs, const RankedCell& rhs) const noexcept {
    if (lhs.weight != rhs.weight) return lhs.weight > rhs.weight;
    return lhs.key < rhs.key;
  }
};

struct DroneSlot {
  DroneId drone = 0;
  /// Empty for a parked drone.
  std::optional<CellKey> cell;
  std::optional<CellIndex> index;
  std::optional<ShapeGeometry> geometry;
  double cell_weight = 0.0;

  bool parked() const noexcept { return !cell.has_value(); }
};

struct Placement {
  std::vector<DroneSlot> drones;
  double covered_weight = 0.0;
  GridConfig config;
};

/// Sums weights in the range's order. Static and dynamic paths both feed it
/// cells in RankOrder, so selections with the same weight multiset give
/// bit-identical totals.
template <typename Range>
double sum_ranked(const Range& cells_in_rank_order) {
  double total = 0.0;
  for (const RankedCell& c : cells_in_rank_order) total += c.weight;
  return total;
}

/// Assigns drones to the min(m, #cells) heaviest non-empty cells in RankOrder;
/// surplus drones are parked. Drone i takes the i-th ranked cell.
/// Throws std::invalid_argument if the store's cell size does not match.
Placement static_place(const CellStore& store, const GridConfig& config);

/// Same selection with a drone budget of 4m. Squares only; a disk config
/// throws UnsupportedError.
Placement static_place_4m(const CellStore& store, const GridConfig& config);

struct RatioCertificate {
  /// Weight covered by the placement.
  double lower = 0.0;
  /// Factor f with lower >= f * OPT: 1/4 for squares, 1/7 for disks.
  double guarantee = 0.0;
};

double guarantee_factor(Shape shape) noexcept;

RatioCertificate placement_ratio_certificate(const CellStore& store,
                                             const GridConfig& config,
                                             const Placement& placement);

}  // namespace dronecover
