#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dronecover/coverage.hpp"
#include "dronecover/geometry.hpp"

namespace dronecover {

// Plain-text formats, one record per line, '#' starts a comment:
//
//   points file:  id x y w
//   trace file:   I id x y w  |  D id  |  U id w
//
// Parse failures throw ParseError carrying the 1-based line number.

std::vector<Point> parse_points(std::string_view text);
std::vector<Event> parse_trace(std::string_view text);

/// Shortest decimal that reads back to the same double, with ".0" appended
/// to integral values ("8" -> "8.0").
std::string format_real(double v);

std::string format_points(const std::vector<Point>& points);
std::string format_event(const Event& event);
std::string format_trace(const std::vector<Event>& events);

}  // namespace dronecover
