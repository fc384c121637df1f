#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "dronecover/coverage.hpp"
#include "dronecover/errors.hpp"
#include "dronecover/workload.hpp"
#include "support/oracles.hpp"

using namespace dronecover;

namespace {

const GridConfig kUnitSquares = GridConfig::make(0.5, Shape::square, 1);
const CellKey kA = cell_key({0, 0});
const CellKey kB = cell_key({2, 0});

// Cell A holds point 1 (weight 10), cell B holds point 2 (weight 7).
CoverageState two_cells() {
  const std::vector<Point> pts{{1, 0.5, 0.5, 10.0}, {2, 2.5, 0.5, 7.0}};
  return CoverageState::build(pts, kUnitSquares);
}

}  // namespace

TEST_CASE("build covers the heaviest cells") {
  const std::vector<Point> pts{
      {1, 0.5, 0.5, 3.0}, {2, 2.5, 0.5, 5.0}, {3, 4.5, 0.5, 1.0}};
  const CoverageState s =
      CoverageState::build(pts, GridConfig::make(0.5, Shape::square, 2));
  CHECK(s.covered_weight() == 8.0);
  CHECK(s.covered().size() == 2);
  CHECK(s.min_covered()->weight == 3.0);
  CHECK(s.max_uncovered()->weight == 1.0);
  CHECK(s.invariant_violation().empty());

  const CoverageState empty =
      CoverageState::build({}, GridConfig::make(0.5, Shape::square, 3));
  CHECK(empty.covered_weight() == 0.0);
  CHECK(empty.parked_count() == 3);
  CHECK_FALSE(empty.min_covered());
  CHECK_FALSE(empty.max_uncovered());

  const std::vector<Point> clump{{1, 0.1, 0.1, 1.0}, {2, 0.2, 0.2, 1.0}, {3, 0.3, 0.3, 1.0}};
  const CoverageState one =
      CoverageState::build(clump, GridConfig::make(0.5, Shape::square, 2));
  CHECK(one.covered().size() == 1);
  CHECK(one.parked_count() == 1);

  CHECK_THROWS_AS(CoverageState::build(std::vector<Point>{{1, 0, 0, 1}, {1, 5, 5, 1}},
                                       kUnitSquares),
                  DuplicateKeyError);
}

TEST_CASE("raising an uncovered cell above minC swaps one drone") {
  CoverageState s = two_cells();
  const SwapReport r = s.apply(UpdateEvent{2, 12.0});
  CHECK(r.moved);
  CHECK(r.vacated == kA);
  CHECK(r.occupied == kB);
  CHECK(r.drone == DroneId{0});
  CHECK(r.covered_weight_after == 12.0);
  CHECK(s.covered_weight() == 12.0);
  CHECK(s.invariant_violation().empty());
}

TEST_CASE("raising an uncovered cell below minC changes nothing") {
  CoverageState s = two_cells();
  const SwapReport r = s.apply(UpdateEvent{2, 9.0});
  CHECK_FALSE(r.moved);
  CHECK(r.covered_weight_after == 10.0);
  CHECK(s.drone_at(kA) == DroneId{0});
}

TEST_CASE("equal weights do not trigger a swap") {
  CoverageState s = two_cells();
  CHECK_FALSE(s.apply(UpdateEvent{2, 10.0}).moved);
  CHECK(s.drone_at(kA) == DroneId{0});
  CHECK(s.covered_weight() == 10.0);
}

TEST_CASE("emptying the covered cell relocates its drone") {
  CoverageState s = two_cells();
  const SwapReport r = s.apply(DeleteEvent{1});
  CHECK(r.moved);
  CHECK(r.vacated == kA);
  CHECK(r.occupied == kB);
  CHECK(r.covered_weight_after == 7.0);

  const SwapReport last = s.apply(DeleteEvent{2});
  CHECK(last.moved);
  CHECK(last.vacated == kB);
  CHECK_FALSE(last.occupied);
  CHECK(s.parked_count() == 1);
  CHECK(s.covered_weight() == 0.0);
  CHECK(s.invariant_violation().empty());
}

TEST_CASE("a covered cell that drops below maxC gives up its drone") {
  CoverageState s = two_cells();
  const SwapReport r = s.apply(UpdateEvent{1, 1.0});
  CHECK(r.moved);
  CHECK(r.vacated == kA);
  CHECK(r.occupied == kB);
  CHECK(r.covered_weight_after == 7.0);
}

TEST_CASE("a new cell is occupied straight from the park") {
  CoverageState s(GridConfig::make(0.5, Shape::square, 2));
  const SwapReport r = s.apply(InsertEvent{{5, 3.5, 3.5, 0.0}});
  CHECK(r.moved);
  CHECK_FALSE(r.vacated);
  CHECK(r.occupied == cell_key({3, 3}));
  CHECK(r.drone == DroneId{0});
  CHECK(s.parked_count() == 1);
}

TEST_CASE("rejected events leave the state untouched") {
  CoverageState s = two_cells();
  CHECK_THROWS_AS(s.apply(InsertEvent{{1, 9.0, 9.0, 1.0}}), DuplicateKeyError);
  CHECK_THROWS_AS(s.apply(DeleteEvent{99}), NotFoundError);
  CHECK_THROWS_AS(s.apply(UpdateEvent{99, 1.0}), NotFoundError);
  CHECK_THROWS_AS(s.apply(UpdateEvent{1, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(s.apply(InsertEvent{{3, NAN, 0.0, 1.0}}), std::invalid_argument);
  CHECK(s.store().point_count() == 2);
  CHECK(s.covered_weight() == 10.0);
  CHECK(s.invariant_violation().empty());
}

TEST_CASE("min_covered and max_uncovered resolve ties by key") {
  const std::vector<Point> pts{
      {1, 0.5, 0.5, 4.0}, {2, 2.5, 0.5, 4.0}, {3, 4.5, 0.5, 4.0}, {4, 6.5, 0.5, 4.0}};
  const CoverageState s = CoverageState::build(pts, GridConfig::make(0.5, Shape::square, 2));
  // Rank order is ascending key among equal weights: the two smallest keys
  // are covered, the lightest covered is the larger of those two.
  std::vector<CellKey> keys;
  for (const Point& p : pts) keys.push_back(s.store().key_of(p.x, p.y));
  std::sort(keys.begin(), keys.end());
  CHECK(s.min_covered()->key == keys[1]);
  CHECK(s.max_uncovered()->key == keys[2]);
}

TEST_CASE("placements expose per-drone geometry") {
  const std::vector<Point> pts{{1, 0.5, 0.5, 1.0}};
  const CoverageState sq = CoverageState::build(pts, GridConfig::make(0.5, Shape::square, 2));
  const Placement p = sq.placements();
  REQUIRE(p.drones.size() == 2);
  const auto& square = std::get<SquareGeometry>(*p.drones[0].geometry);
  CHECK(square.min_corner == Coord{0.0, 0.0});
  CHECK(square.side == 1.0);
  CHECK(p.drones[1].parked());
  CHECK_FALSE(p.drones[1].geometry);

  const std::vector<Point> near{{1, 0.2, 0.2, 1.0}};
  const CoverageState dk = CoverageState::build(near, GridConfig::make(1.0, Shape::disk, 1));
  const auto& disk = std::get<DiskGeometry>(*dk.placements().drones[0].geometry);
  CHECK(disk.center.x == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(disk.center.y == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(disk.radius == 1.0);
}

TEST_CASE("dynamic state tracks a static recomputation on random traces") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Workload::Options opts;
    opts.extent = 6.0;
    Workload wl(seed, opts);
    const auto config = GridConfig::make(0.5, seed % 2 ? Shape::square : Shape::disk,
                                         static_cast<std::uint32_t>(1 + seed % 5));
    const auto initial = wl.points(30);
    CoverageState state = CoverageState::build(initial, config);
    for (const Event& e : wl.events(1000, 60)) {
      const SwapReport r = state.apply(e);
      REQUIRE(r.covered_weight_after == static_place(state.store(), config).covered_weight);
      REQUIRE(state.invariant_violation() == "");
      if (!r.moved) {
        CHECK_FALSE(r.vacated);
        CHECK_FALSE(r.occupied);
      }
    }
  }
}
