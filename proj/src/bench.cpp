#include "dronecover/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "dronecover/coverage.hpp"
#include "dronecover/workload.hpp"

namespace dronecover {

namespace {

double percentile(std::vector<double>& samples, double q) {
  if (samples.empty()) return 0.0;
  const auto rank = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(samples.size())) - 1.0);
  const auto nth = samples.begin() +
                   static_cast<std::ptrdiff_t>(std::min(rank, samples.size() - 1));
  std::nth_element(samples.begin(), nth, samples.end());
  return *nth;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  using Clock = std::chrono::steady_clock;
  const GridConfig config =
      GridConfig::make(options.r_cov, options.shape, options.m);

  std::vector<BenchRow> rows;
  for (const std::size_t n : options.sizes) {
    Workload::Options wopts;
    const double cells = std::max(1.0, static_cast<double>(n) / options.points_per_cell);
    wopts.extent = std::sqrt(cells) * config.cell_size();
    Workload workload(options.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)), wopts);
    const std::vector<Point> points = workload.points(n);
    const std::vector<Event> trace =
        workload.events(options.events, std::max<std::size_t>(n, 1) * 2);

    const auto t0 = Clock::now();
    CoverageState state = CoverageState::build(points, config);
    const auto t1 = Clock::now();

    std::vector<double> latency;
    latency.reserve(trace.size());
    for (const Event& e : trace) {
      const auto s = Clock::now();
      state.apply(e);
      const auto f = Clock::now();
      latency.push_back(
          std::chrono::duration<double, std::nano>(f - s).count());
    }

    BenchRow row;
    row.n = n;
    row.events = trace.size();
    row.build_seconds = std::chrono::duration<double>(t1 - t0).count();
    row.median_ns = percentile(latency, 0.5);
    row.p99_ns = percentile(latency, 0.99);
    row.covered_weight = state.covered_weight();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dronecover
