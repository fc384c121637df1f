#pragma once

#include <iosfwd>
#include <string_view>

#include "dronecover/bench.hpp"
#include "dronecover/geometry.hpp"

namespace dronecover::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitEventRejected = 2;
inline constexpr int kExitVerifyMismatch = 3;

// Each command reads already-loaded file contents and writes its report to
// `out`. Parse errors and size-guard violations propagate as exceptions.

int cmd_place(std::string_view points_text, const GridConfig& config,
              std::ostream& out);

int cmd_replay(std::string_view points_text, std::string_view trace_text,
               const GridConfig& config, bool verify, std::ostream& out,
               std::ostream& err);

int cmd_oracle(std::string_view points_text, const GridConfig& config,
               std::ostream& out);

int cmd_bound(std::string_view points_text, const GridConfig& config,
              std::ostream& out);

int cmd_bench(const BenchOptions& options, std::ostream& out);

}  // namespace dronecover::cli
