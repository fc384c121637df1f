#include "dronecover/placement.hpp"

#include <algorithm>
#include <stdexcept>

#include "dronecover/errors.hpp"

namespace dronecover {

ShapeGeometry cell_geometry(CellIndex ci, const GridConfig& config) {
  const double r = config.cell_size();
  if (config.shape == Shape::square) {
    return SquareGeometry{Coord{static_cast<double>(ci.a) * r,
                                static_cast<double>(ci.b) * r},
                          r};
  }
  return DiskGeometry{cell_center(ci, r), config.r_cov};
}

namespace {

Placement place_with_budget(const CellStore& store, const GridConfig& config,
                            std::uint32_t budget) {
  if (store.cell_size() != config.cell_size()) {
    throw std::invalid_argument("store cell size does not match config");
  }
  std::vector<RankedCell> ranked;
  ranked.reserve(store.cell_count());
  for (const auto& [key, agg] : store.cells()) {
    ranked.push_back(RankedCell{agg.weight, key});
  }
  const std::size_t chosen = std::min<std::size_t>(budget, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + chosen, ranked.end(),
                    RankOrder{});
  ranked.resize(chosen);

  Placement out;
  out.config = config;
  out.covered_weight = sum_ranked(ranked);
  out.drones.reserve(budget);
  for (DroneId d = 0; d < budget; ++d) {
    DroneSlot slot;
    slot.drone = d;
    if (d < chosen) {
      const CellAggregate* agg = store.find_cell(ranked[d].key);
      slot.cell = ranked[d].key;
      slot.index = agg->index;
      slot.geometry = cell_geometry(agg->index, config);
      slot.cell_weight = ranked[d].weight;
    }
    out.drones.push_back(slot);
  }
  return out;
}

}  // namespace

Placement static_place(const CellStore& store, const GridConfig& config) {
  return place_with_budget(store, config, config.m);
}

Placement static_place_4m(const CellStore& store, const GridConfig& config) {
  if (config.shape != Shape::square) {
    throw UnsupportedError("the 4m budget bound holds for squares only");
  }
  return place_with_budget(store, config, 4 * config.m);
}

double guarantee_factor(Shape shape) noexcept {
  return shape == Shape::square ? 0.25 : 1.0 / 7.0;
}

RatioCertificate placement_ratio_certificate(const CellStore&,
                                             const GridConfig& config,
                                             const Placement& placement) {
  return RatioCertificate{placement.covered_weight,
                          guarantee_factor(config.shape)};
}

}  // namespace dronecover
