#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "dronecover/errors.hpp"
#include "dronecover/oracle.hpp"
#include "support/oracles.hpp"

using namespace dronecover;

TEST_CASE("exact_square_opt examples") {
  const std::vector<Point> single{{1, 2.0, 2.0, 1.0}};
  CHECK(exact_square_opt(single, 0.5, 1).opt_weight == 1.0);

  const std::vector<Point> straddle{
      {1, 0.99, 0.99, 1.0}, {2, 1.01, 0.99, 1.0}, {3, 0.99, 1.01, 1.0}, {4, 1.01, 1.01, 1.0}};
  const OracleResult r = exact_square_opt(straddle, 0.5, 1);
  CHECK(r.opt_weight == 4.0);
  REQUIRE(r.witness.size() == 1);
  const auto& sq = std::get<SquareGeometry>(r.witness[0]);
  for (const Point& p : straddle) CHECK(sq.contains({p.x, p.y}));

  const std::vector<Point> clusters{
      {1, 0.0, 0.0, 1.0}, {2, 0.2, 0.1, 2.0}, {3, 5.0, 5.0, 2.5}, {4, 5.1, 5.3, 2.5}};
  CHECK(exact_square_opt(clusters, 0.5, 1).opt_weight == 5.0);
  CHECK(exact_square_opt(clusters, 0.5, 2).opt_weight == 8.0);
  CHECK(exact_square_opt({}, 0.5, 2).opt_weight == 0.0);
}

TEST_CASE("square boundary is inclusive") {
  const std::vector<Point> pts{{1, 0.0, 0.0, 1.0}, {2, 1.0, 1.0, 1.0}};
  CHECK(exact_square_opt(pts, 0.5, 1).opt_weight == 2.0);
}

TEST_CASE("exact_disk_opt examples") {
  const std::vector<Point> single{{1, -3.0, 2.0, 4.5}};
  CHECK(exact_disk_opt(single, 1.0, 1).opt_weight == 4.5);

  const std::vector<Point> touching{{1, 0.0, 0.0, 1.0}, {2, 2.0, 0.0, 2.0}};
  CHECK(exact_disk_opt(touching, 1.0, 1).opt_weight == 3.0);

  const std::vector<Point> tilted{{1, 0.3, 0.1, 1.0}, {2, 0.3 + 1.2, 0.1 + 1.6, 2.0}};
  CHECK(exact_disk_opt(tilted, 1.0, 1).opt_weight == 3.0);

  const std::vector<Point> apart{{1, 0.0, 0.0, 1.0}, {2, 2.5, 0.0, 9.0}};
  CHECK(exact_disk_opt(apart, 1.0, 1).opt_weight == 9.0);
  CHECK(exact_disk_opt(apart, 1.0, 2).opt_weight == 10.0);
}

TEST_CASE("exact_mwpihp examples") {
  const IntervalInstance three({{0.0, 2.0}, {1.0, 3.0}, {5.0, 4.0}}, 2.0, 1);
  CHECK(exact_mwpihp(three) == 5.0);
  CHECK(exact_mwpihp(IntervalInstance({{0.0, 2.0}, {1.0, 3.0}, {5.0, 4.0}}, 2.0, 3)) == 9.0);
  CHECK(exact_mwpihp(IntervalInstance({{0.0, 2.0}, {1.0, 3.0}}, 0.5, 3)) == 5.0);
  CHECK(exact_mwpihp(IntervalInstance({{0.0, 2.0}, {1.0, 3.0}, {5.0, 4.0}}, 2.0, 0)) == 0.0);
}

TEST_CASE("size guards") {
  std::mt19937_64 rng(5);
  const auto thirteen = testing::random_points(rng, 13, 5.0, 1.0);
  const auto eleven = testing::random_points(rng, 11, 5.0, 1.0);
  CHECK_THROWS_AS(exact_square_opt(thirteen, 1.0, 1), SizeGuardError);
  CHECK_THROWS_AS(exact_square_opt(eleven, 1.0, 4), SizeGuardError);
  CHECK_THROWS_AS(exact_disk_opt(eleven, 1.0, 1), SizeGuardError);
  CHECK_THROWS_AS(exact_disk_opt(testing::random_points(rng, 5, 5.0, 1.0), 1.0, 3),
                  SizeGuardError);
  std::vector<WeightedInterval> items(13, {0.0, 1.0});
  CHECK_THROWS_AS(exact_mwpihp(IntervalInstance(items, 1.0, 1)), SizeGuardError);
  CHECK_THROWS_AS(exact_mwpihp(IntervalInstance({{0.0, 1.0}}, 1.0, 4)), SizeGuardError);
}

TEST_CASE("square candidates lose nothing against a dense corner sweep") {
  // Coordinates on a 0.25 lattice; the sweep steps by a quarter of that.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> cell(0, 16);
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_int_distribution<std::uint32_t> budget(1, 2);
  std::uniform_real_distribution<double> weight(0.0, 10.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point> pts;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) {
      pts.push_back(Point{static_cast<PointId>(i + 1), 0.25 * cell(rng),
                          0.25 * cell(rng), weight(rng)});
    }
    const std::uint32_t m = budget(rng);
    const double oracle = exact_square_opt(pts, 0.5, m).opt_weight;
    const double sweep = testing::sweep_square_opt(pts, 1.0, 0.0625, m);
    CHECK(oracle == doctest::Approx(sweep).epsilon(1e-12));
  }
}

TEST_CASE("oracle witnesses reproduce the optimum and survive translation") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> shift(-50.0, 50.0);
  for (int trial = 0; trial < 60; ++trial) {
    const bool disk = trial % 2 == 1;
    const auto pts = testing::random_points(rng, disk ? 8 : 10, 4.0, 10.0);
    const std::uint32_t m = disk ? 2 : 3;
    const OracleResult r = disk ? exact_disk_opt(pts, 0.8, m) : exact_square_opt(pts, 0.8, m);
    CHECK(r.witness.size() <= m);

    double covered = 0.0;
    for (const Point& p : pts) {
      const bool hit = std::any_of(r.witness.begin(), r.witness.end(), [&](const ShapeGeometry& g) {
        if (const auto* d = std::get_if<DiskGeometry>(&g)) {
          DiskGeometry padded = *d;
          padded.radius *= 1.0 + kDiskBoundarySlack;
          return padded.contains({p.x, p.y});
        }
        return std::get<SquareGeometry>(g).contains({p.x, p.y});
      });
      if (hit) covered += p.w;
    }
    CHECK(covered == doctest::Approx(r.opt_weight).epsilon(1e-12));

    auto moved = pts;
    const double dx = shift(rng), dy = shift(rng);
    for (Point& p : moved) {
      p.x += dx;
      p.y += dy;
    }
    const double again = disk ? exact_disk_opt(moved, 0.8, m).opt_weight
                              : exact_square_opt(moved, 0.8, m).opt_weight;
    CHECK(std::abs(again - r.opt_weight) <= 1e-9);
  }
}
