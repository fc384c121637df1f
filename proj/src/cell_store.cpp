#include "dronecover/cell_store.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dronecover/errors.hpp"

namespace dronecover {

void validate_weight(double w) {
  if (!std::isfinite(w) || w < 0.0) {
    throw std::invalid_argument("weight must be finite and non-negative");
  }
}

CellStore::CellStore(double cell_size) : cell_size_(cell_size) {
  if (!std::isfinite(cell_size) || cell_size <= 0.0) {
    throw std::invalid_argument("cell size must be positive and finite");
  }
}

CellKey CellStore::key_of(double x, double y) const {
  return cell_key(cell_index(Coord{x, y}, cell_size_));
}

CellChange CellStore::insert_point(const Point& p) {
  validate_weight(p.w);
  const CellIndex ci = cell_index(Coord{p.x, p.y}, cell_size_);
  const CellKey key = cell_key(ci);
  auto [pit, fresh] = points_.try_emplace(p.id, Entry{p, key});
  if (!fresh) {
    throw DuplicateKeyError("duplicate point id " + std::to_string(p.id));
  }

  CellChange change{key, ci};
  auto [cit, created] = cells_.try_emplace(key, CellAggregate{0.0, 0, ci});
  change.existed_before = !created;
  change.exists_after = true;
  change.weight_before = cit->second.weight;
  cit->second.weight += p.w;
  cit->second.count += 1;
  change.weight_after = cit->second.weight;
  change.delta = p.w;
  return change;
}

CellChange CellStore::delete_point(PointId id) {
  auto pit = points_.find(id);
  if (pit == points_.end()) {
    throw NotFoundError("unknown point id " + std::to_string(id));
  }
  const Entry entry = pit->second;
  points_.erase(pit);

  auto cit = cells_.find(entry.key);
  CellChange change{entry.key, cit->second.index};
  change.existed_before = true;
  change.weight_before = cit->second.weight;
  change.delta = -entry.point.w;
  if (--cit->second.count == 0) {
    cells_.erase(cit);
    change.exists_after = false;
    change.weight_after = 0.0;
  } else {
    cit->second.weight -= entry.point.w;
    change.exists_after = true;
    change.weight_after = cit->second.weight;
  }
  return change;
}

CellChange CellStore::update_weight(PointId id, double w_new) {
  validate_weight(w_new);
  auto pit = points_.find(id);
  if (pit == points_.end()) {
    throw NotFoundError("unknown point id " + std::to_string(id));
  }
  Entry& entry = pit->second;
  auto cit = cells_.find(entry.key);
  CellChange change{entry.key, cit->second.index};
  change.existed_before = true;
  change.exists_after = true;
  change.weight_before = cit->second.weight;
  change.delta = w_new - entry.point.w;
  entry.point.w = w_new;
  if (change.delta != 0.0) {
    cit->second.weight += change.delta;
  }
  change.weight_after = cit->second.weight;
  return change;
}

double CellStore::cell_weight(CellKey key) const {
  auto it = cells_.find(key);
  return it == cells_.end() ? 0.0 : it->second.weight;
}

const CellAggregate* CellStore::find_cell(CellKey key) const {
  auto it = cells_.find(key);
  return it == cells_.end() ? nullptr : &it->second;
}

const Point* CellStore::find_point(PointId id) const {
  auto it = points_.find(id);
  return it == points_.end() ? nullptr : &it->second.point;
}

std::vector<std::pair<CellKey, CellAggregate>> CellStore::nonempty_cells()
    const {
  return {cells_.begin(), cells_.end()};
}

std::vector<Point> CellStore::points() const {
  std::vector<Point> out;
  out.reserve(points_.size());
  for (const auto& [id, entry] : points_) out.push_back(entry.point);
  return out;
}

std::map<CellKey, CellAggregate> CellStore::recomputed_cells() const {
  std::map<CellKey, CellAggregate> out;
  for (const auto& [id, entry] : points_) {
    auto [it, created] = out.try_emplace(
        entry.key,
        CellAggregate{0.0, 0, cell_index(Coord{entry.point.x, entry.point.y},
                                         cell_size_)});
    it->second.weight += entry.point.w;
    it->second.count += 1;
  }
  return out;
}

void CellStore::recompute() {
  const auto fresh = recomputed_cells();
  cells_ = decltype(cells_)(fresh.begin(), fresh.end());
}

}  // namespace dronecover
