// dronecover: place and maintain covering drones over weighted points.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "dronecover/geometry.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GridFlags {
  double r_cov = 1.0;
  std::uint32_t m = 1;
  std::string shape = "square";

  void attach(CLI::App* cmd) {
    cmd->add_option("--r-cov", r_cov, "Covering radius (meters)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--m", m, "Number of drones")->check(CLI::PositiveNumber);
    cmd->add_option("--shape", shape, "Covering shape")
        ->check(CLI::IsMember({"square", "disk"}));
  }

  dronecover::GridConfig config() const {
    return dronecover::GridConfig::make(r_cov, dronecover::shape_from_string(shape), m);
  }
};

}  // namespace

int main(int argc, char** argv) {
  namespace cli = dronecover::cli;
  CLI::App app{"Place and dynamically maintain m covering drones over weighted points"};
  app.require_subcommand(1);

  GridFlags grid;
  std::string points_path;
  std::string trace_path;
  bool verify = false;

  auto* place = app.add_subcommand("place", "Static placement with upper bounds");
  place->add_option("points", points_path, "Points file ('-' for stdin)")->required();
  grid.attach(place);

  auto* replay = app.add_subcommand("replay", "Replay an event trace");
  replay->add_option("points", points_path, "Initial points file")->required();
  replay->add_option("trace", trace_path, "Trace file ('-' for stdin)")->required();
  replay->add_flag("--verify", verify, "Cross-check every step against a static placement");
  grid.attach(replay);

  auto* oracle = app.add_subcommand("oracle", "Exact optimum for small instances");
  oracle->add_option("points", points_path, "Points file ('-' for stdin)")->required();
  grid.attach(oracle);

  auto* bound = app.add_subcommand("bound", "1D projection upper bounds");
  bound->add_option("points", points_path, "Points file ('-' for stdin)")->required();
  grid.attach(bound);

  dronecover::BenchOptions bench_opts;
  std::string bench_shape = "square";
  auto* bench = app.add_subcommand("bench", "Per-event update latency");
  bench->add_option("--sizes", bench_opts.sizes, "Instance sizes")
      ->delimiter(',')
      ->default_str("1000,10000,100000,1000000");
  bench->add_option("--events", bench_opts.events, "Events per size");
  bench->add_option("--seed", bench_opts.seed, "Generator seed");
  bench->add_option("--r-cov", bench_opts.r_cov, "Covering radius")
      ->check(CLI::PositiveNumber);
  bench->add_option("--m", bench_opts.m, "Number of drones")->check(CLI::PositiveNumber);
  bench->add_option("--shape", bench_shape, "Covering shape")
      ->check(CLI::IsMember({"square", "disk"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*place) {
      return cli::cmd_place(read_input(points_path), grid.config(), std::cout);
    }
    if (*replay) {
      const std::string points_text = read_input(points_path);
      const std::string trace_text = read_input(trace_path);
      return cli::cmd_replay(points_text, trace_text, grid.config(), verify,
                             std::cout, std::cerr);
    }
    if (*oracle) {
      return cli::cmd_oracle(read_input(points_path), grid.config(), std::cout);
    }
    if (*bound) {
      return cli::cmd_bound(read_input(points_path), grid.config(), std::cout);
    }
    if (*bench) {
      if (bench_opts.sizes.empty()) {
        bench_opts.sizes = {1000, 10000, 100000, 1000000};
      }
      bench_opts.shape = dronecover::shape_from_string(bench_shape);
      return cli::cmd_bench(bench_opts, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  }
  return cli::kExitOk;
}
