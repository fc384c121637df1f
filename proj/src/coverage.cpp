#include "dronecover/coverage.hpp"

#include <sstream>
#include <stdexcept>

namespace dronecover {

CoverageState::CoverageState(const GridConfig& config)
    : config_(config), store_(config.cell_size()) {
  for (DroneId d = 0; d < config_.m; ++d) parked_.insert(d);
}

CoverageState CoverageState::build(std::span<const Point> points,
                                   const GridConfig& config) {
  CoverageState state(config);
  for (const Point& p : points) state.store_.insert_point(p);

  const Placement initial = static_place(state.store_, config);
  for (const DroneSlot& slot : initial.drones) {
    if (slot.parked()) continue;
    state.covered_.insert(RankedCell{slot.cell_weight, *slot.cell});
    state.assignment_.emplace(*slot.cell, slot.drone);
    state.parked_.erase(slot.drone);
  }
  for (const auto& [key, agg] : state.store_.cells()) {
    if (!state.assignment_.contains(key)) {
      state.uncovered_.insert(RankedCell{agg.weight, key});
    }
  }
  return state;
}

SwapReport CoverageState::apply(const Event& event) {
  const CellChange change = std::visit(
      [this](const auto& e) -> CellChange {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, InsertEvent>) {
          return store_.insert_point(e.point);
        } else if constexpr (std::is_same_v<T, DeleteEvent>) {
          return store_.delete_point(e.id);
        } else {
          return store_.update_weight(e.id, e.w);
        }
      },
      event);

  SwapReport report;
  revise(change, report);
  if (!report.moved) restore(report);
  report.covered_weight_after = covered_weight();
  return report;
}

void CoverageState::revise(const CellChange& change, SwapReport& report) {
  const auto drone = assignment_.find(change.key);
  const bool was_covered = drone != assignment_.end();
  auto& home = was_covered ? covered_ : uncovered_;

  if (change.existed_before) {
    home.erase(RankedCell{change.weight_before, change.key});
  }
  if (change.exists_after) {
    home.insert(RankedCell{change.weight_after, change.key});
    return;
  }
  if (!was_covered) return;

  // The covered cell lost its last point: its drone goes to maxC or parks.
  const DroneId d = drone->second;
  assignment_.erase(drone);
  report.moved = true;
  report.drone = d;
  report.vacated = change.key;
  if (uncovered_.empty()) {
    parked_.insert(d);
  } else {
    const RankedCell target = *uncovered_.begin();
    occupy(target, d);
    report.occupied = target.key;
  }
}

void CoverageState::occupy(const RankedCell& cell, DroneId drone) {
  uncovered_.erase(cell);
  covered_.insert(cell);
  assignment_.emplace(cell.key, drone);
}

void CoverageState::restore(SwapReport& report) {
  if (uncovered_.empty()) return;
  const RankedCell max_c = *uncovered_.begin();

  if (!parked_.empty()) {
    const DroneId d = *parked_.begin();
    parked_.erase(parked_.begin());
    occupy(max_c, d);
    report.moved = true;
    report.drone = d;
    report.occupied = max_c.key;
    return;
  }

  const RankedCell min_c = *covered_.rbegin();
  if (!(max_c.weight > min_c.weight)) return;

  auto slot = assignment_.find(min_c.key);
  const DroneId d = slot->second;
  assignment_.erase(slot);
  covered_.erase(min_c);
  uncovered_.insert(min_c);
  occupy(max_c, d);
  report.moved = true;
  report.drone = d;
  report.vacated = min_c.key;
  report.occupied = max_c.key;
}

double CoverageState::covered_weight() const { return sum_ranked(covered_); }

Placement CoverageState::placements() const {
  Placement out;
  out.config = config_;
  out.covered_weight = covered_weight();
  out.drones.resize(config_.m);
  for (DroneId d = 0; d < config_.m; ++d) out.drones[d].drone = d;
  for (const auto& [key, d] : assignment_) {
    const CellAggregate* agg = store_.find_cell(key);
    DroneSlot& slot = out.drones[d];
    slot.cell = key;
    slot.index = agg->index;
    slot.geometry = cell_geometry(agg->index, config_);
    slot.cell_weight = agg->weight;
  }
  return out;
}

std::optional<RankedCell> CoverageState::min_covered() const {
  if (covered_.empty()) return std::nullopt;
  return *covered_.rbegin();
}

std::optional<RankedCell> CoverageState::max_uncovered() const {
  if (uncovered_.empty()) return std::nullopt;
  return *uncovered_.begin();
}

std::optional<DroneId> CoverageState::drone_at(CellKey key) const {
  auto it = assignment_.find(key);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

std::string CoverageState::invariant_violation() const {
  std::ostringstream err;
  const auto check_member = [&](const RankedCell& c, bool covered) {
    const CellAggregate* agg = store_.find_cell(c.key);
    if (agg == nullptr) {
      err << "cell " << c.key.value << " is not live";
    } else if (agg->weight != c.weight) {
      err << "cell " << c.key.value << " weight " << c.weight
          << " differs from store " << agg->weight;
    } else if (assignment_.contains(c.key) != covered) {
      err << "cell " << c.key.value << " assignment disagrees with its set";
    }
    return err.tellp() == 0;
  };
  for (const RankedCell& c : covered_) {
    if (!check_member(c, true)) return err.str();
  }
  for (const RankedCell& c : uncovered_) {
    if (!check_member(c, false)) return err.str();
  }
  if (covered_.size() + uncovered_.size() != store_.cell_count()) {
    return "covered and uncovered do not partition the live cells";
  }
  if (assignment_.size() != covered_.size()) {
    return "assignment size differs from covered size";
  }
  const std::size_t expected =
      std::min<std::size_t>(config_.m, store_.cell_count());
  if (covered_.size() != expected) {
    return "covered holds " + std::to_string(covered_.size()) +
           " cells, expected " + std::to_string(expected);
  }
  std::set<DroneId> drones(parked_);
  for (const auto& [key, d] : assignment_) {
    if (!drones.insert(d).second) return "drone assigned twice";
  }
  if (drones.size() != config_.m ||
      (!drones.empty() && *drones.rbegin() != config_.m - 1)) {
    return "drone ordinals are not exactly 0..m-1";
  }
  if (!covered_.empty() && !uncovered_.empty() &&
      covered_.rbegin()->weight < uncovered_.begin()->weight) {
    return "lightest covered cell is lighter than heaviest uncovered cell";
  }
  return {};
}

}  // namespace dronecover
