#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "dronecover/coverage.hpp"
#include "dronecover/geometry.hpp"

namespace dronecover {

/// Seeded generator of random point sets and valid event traces. Everything
/// is a deterministic function of the seed and the call sequence.
class Workload {
 public:
  struct Options {
    /// Points are uniform in [0, extent) x [0, extent).
    double extent = 10.0;
    double max_weight = 10.0;
    /// Relative frequencies of insert / delete / update events.
    double insert_share = 1.0;
    double delete_share = 1.0;
    double update_share = 1.0;
  };

  Workload(std::uint64_t seed, Options options);

  /// Fresh points with ids continuing from the previous call.
  std::vector<Point> points(std::size_t n);

  /// Events valid against the points produced so far and the events
  /// already emitted. Deletes and updates are skipped while no point is
  /// live; inserts are skipped once `max_live` points are live.
  std::vector<Event> events(std::size_t count, std::size_t max_live);

  std::size_t live_count() const noexcept { return live_.size(); }
  std::mt19937_64& rng() noexcept { return rng_; }

 private:
  Point fresh_point();

  std::mt19937_64 rng_;
  Options options_;
  PointId next_id_ = 1;
  std::vector<PointId> live_;
};

}  // namespace dronecover
