#include "commands.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <variant>

#include "dronecover/coverage.hpp"
#include "dronecover/interval_bound.hpp"
#include "dronecover/io.hpp"
#include "dronecover/oracle.hpp"
#include "dronecover/placement.hpp"

namespace dronecover::cli {

namespace {

std::string key_or_dash(const std::optional<CellKey>& key) {
  return key ? std::to_string(key->value) : std::string("-");
}

void print_header(std::ostream& out, const GridConfig& config, std::size_t n) {
  out << "shape " << to_string(config.shape) << " r_cov "
      << format_real(config.r_cov) << " cell_size "
      << format_real(config.cell_size()) << " m " << config.m << " n " << n
      << '\n';
}

void print_slot(std::ostream& out, const DroneSlot& slot) {
  out << "drone " << slot.drone;
  if (slot.parked()) {
    out << " parked\n";
    return;
  }
  out << " cell " << slot.index->a << ' ' << slot.index->b << " key "
      << slot.cell->value << " weight " << format_real(slot.cell_weight);
  std::visit(
      [&out](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SquareGeometry>) {
          out << " square " << format_real(g.min_corner.x) << ' '
              << format_real(g.min_corner.y) << ' ' << format_real(g.side);
        } else {
          out << " disk " << format_real(g.center.x) << ' '
              << format_real(g.center.y) << ' ' << format_real(g.radius);
        }
      },
      *slot.geometry);
  out << '\n';
}

CellStore load_store(const std::vector<Point>& points, const GridConfig& config) {
  CellStore store(config.cell_size());
  for (const Point& p : points) store.insert_point(p);
  return store;
}

double ratio(double sol, double opt) { return opt > 0.0 ? sol / opt : 1.0; }

}  // namespace

int cmd_place(std::string_view points_text, const GridConfig& config,
              std::ostream& out) {
  const std::vector<Point> points = parse_points(points_text);
  const CellStore store = load_store(points, config);
  const Placement placement = static_place(store, config);
  const UpperBound bound = upper_bound_2d(points, config);

  print_header(out, config, points.size());
  out << "covered_weight " << format_real(placement.covered_weight) << '\n';
  for (const DroneSlot& slot : placement.drones) print_slot(out, slot);
  out << "bound_x " << format_real(bound.bound_x) << '\n'
      << "bound_y " << format_real(bound.bound_y) << '\n'
      << "bound_min " << format_real(bound.bound) << '\n'
      << "guarantee " << format_real(guarantee_factor(config.shape)) << '\n';
  return kExitOk;
}

int cmd_replay(std::string_view points_text, std::string_view trace_text,
               const GridConfig& config, bool verify, std::ostream& out,
               std::ostream& err) {
  const std::vector<Point> points = parse_points(points_text);
  const std::vector<Event> trace = parse_trace(trace_text);
  CoverageState state = CoverageState::build(points, config);
  out << "# initial covered_weight " << format_real(state.covered_weight())
      << '\n';

  std::size_t ordinal = 0;
  for (const Event& event : trace) {
    ++ordinal;
    SwapReport report;
    try {
      report = state.apply(event);
    } catch (const std::exception& e) {
      err << "event " << ordinal << " (" << format_event(event)
          << ") rejected: " << e.what() << '\n';
      return kExitEventRejected;
    }
    out << "event " << ordinal << ' ' << format_event(event)
        << " covered_weight " << format_real(report.covered_weight_after);
    if (report.moved) {
      out << " swap drone " << *report.drone << " vacated "
          << key_or_dash(report.vacated) << " occupied "
          << key_or_dash(report.occupied);
    } else {
      out << " no-swap";
    }
    out << '\n';

    if (verify) {
      const double expected =
          static_place(state.store(), config).covered_weight;
      const std::string broken = state.invariant_violation();
      if (report.covered_weight_after != expected || !broken.empty()) {
        err << "verify failed at event " << ordinal << ": dynamic "
            << format_real(report.covered_weight_after) << " static "
            << format_real(expected) << (broken.empty() ? "" : "; ") << broken
            << '\n';
        return kExitVerifyMismatch;
      }
    }
  }
  return kExitOk;
}

int cmd_oracle(std::string_view points_text, const GridConfig& config,
               std::ostream& out) {
  const std::vector<Point> points = parse_points(points_text);
  const OracleResult opt =
      config.shape == Shape::square
          ? exact_square_opt(points, config.r_cov, config.m)
          : exact_disk_opt(points, config.r_cov, config.m);
  const CellStore store = load_store(points, config);
  const double sol = static_place(store, config).covered_weight;

  print_header(out, config, points.size());
  out << "opt " << format_real(opt.opt_weight) << '\n'
      << "sol " << format_real(sol) << '\n'
      << "ratio " << format_real(ratio(sol, opt.opt_weight)) << '\n'
      << "guarantee " << format_real(guarantee_factor(config.shape)) << '\n';
  return kExitOk;
}

int cmd_bound(std::string_view points_text, const GridConfig& config,
              std::ostream& out) {
  const std::vector<Point> points = parse_points(points_text);
  const UpperBound bound = upper_bound_2d(points, config);
  const CellStore store = load_store(points, config);
  const double sol = static_place(store, config).covered_weight;

  print_header(out, config, points.size());
  out << "bound_x " << format_real(bound.bound_x) << '\n'
      << "bound_y " << format_real(bound.bound_y) << '\n'
      << "bound_min " << format_real(bound.bound) << '\n'
      << "sol " << format_real(sol) << '\n'
      << "sol_over_bound " << format_real(ratio(sol, bound.bound)) << '\n';
  return kExitOk;
}

int cmd_bench(const BenchOptions& options, std::ostream& out) {
  out << "n events build_s median_ns p99_ns covered_weight\n";
  for (const BenchRow& row : run_bench(options)) {
    char line[160];
    std::snprintf(line, sizeof line, "%zu %zu %.3f %.1f %.1f %s\n", row.n,
                  row.events, row.build_seconds, row.median_ns, row.p99_ns,
                  format_real(row.covered_weight).c_str());
    out << line;
  }
  return kExitOk;
}

}  // namespace dronecover::cli
