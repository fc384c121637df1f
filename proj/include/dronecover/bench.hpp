#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dronecover/geometry.hpp"

namespace dronecover {

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t events = 10000;
  std::uint64_t seed = 1;
  double r_cov = 0.5;
  Shape shape = Shape::square;
  std::uint32_t m = 16;
  /// Average number of points per non-empty cell in the generated instance.
  double points_per_cell = 4.0;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t events = 0;
  double build_seconds = 0.0;
  /// Per-event latency of CoverageState::apply, in nanoseconds. Zero when
  /// no events were run.
  double median_ns = 0.0;
  double p99_ns = 0.0;
  /// Covered weight after the last event; ties the row to its instance.
  double covered_weight = 0.0;
};

/// For each size: builds a random instance, then times each event of a
/// random insert/delete/update trace individually. Instance and trace
/// depend only on (seed, n); the timing loop is single-threaded.
std::vector<BenchRow> run_bench(const BenchOptions& options);

}  // namespace dronecover
