#include "dronecover/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "dronecover/errors.hpp"

namespace dronecover {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  return fields;
}

template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    const auto fields = split_fields(text.substr(pos, end - pos));
    if (!fields.empty()) fn(line_no, fields);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

PointId parse_id(std::size_t line, std::string_view s) {
  PointId v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, "bad id '" + std::string(s) + "'");
  }
  return v;
}

double parse_real(std::size_t line, std::string_view s, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

double parse_weight(std::size_t line, std::string_view s) {
  const double w = parse_real(line, s, "weight");
  if (w < 0.0) throw ParseError(line, "negative weight");
  return w;
}

void expect_fields(std::size_t line, std::size_t got, std::size_t want,
                   const char* form) {
  if (got != want) {
    throw ParseError(line, std::string("expected '") + form + "'");
  }
}

}  // namespace

std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> out;
  std::set<PointId> seen;
  for_each_record(text, [&](std::size_t line, const auto& f) {
    expect_fields(line, f.size(), 4, "id x y w");
    Point p{parse_id(line, f[0]), parse_real(line, f[1], "x"),
            parse_real(line, f[2], "y"), parse_weight(line, f[3])};
    if (!seen.insert(p.id).second) {
      throw ParseError(line, "duplicate id " + std::to_string(p.id));
    }
    out.push_back(p);
  });
  return out;
}

std::vector<Event> parse_trace(std::string_view text) {
  std::vector<Event> out;
  for_each_record(text, [&](std::size_t line, const auto& f) {
    if (f[0] == "I") {
      expect_fields(line, f.size(), 5, "I id x y w");
      out.push_back(InsertEvent{Point{parse_id(line, f[1]),
                                      parse_real(line, f[2], "x"),
                                      parse_real(line, f[3], "y"),
                                      parse_weight(line, f[4])}});
    } else if (f[0] == "D") {
      expect_fields(line, f.size(), 2, "D id");
      out.push_back(DeleteEvent{parse_id(line, f[1])});
    } else if (f[0] == "U") {
      expect_fields(line, f.size(), 3, "U id w");
      out.push_back(UpdateEvent{parse_id(line, f[1]), parse_weight(line, f[2])});
    } else {
      throw ParseError(line, "unknown event kind '" + std::string(f[0]) + "'");
    }
  });
  return out;
}

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  if (std::isfinite(v) && s.find_first_of(".eE") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string format_points(const std::vector<Point>& points) {
  std::string out;
  for (const Point& p : points) {
    out += std::to_string(p.id) + ' ' + format_real(p.x) + ' ' +
           format_real(p.y) + ' ' + format_real(p.w) + '\n';
  }
  return out;
}

std::string format_event(const Event& event) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, InsertEvent>) {
          return "I " + std::to_string(e.point.id) + ' ' +
                 format_real(e.point.x) + ' ' + format_real(e.point.y) + ' ' +
                 format_real(e.point.w);
        } else if constexpr (std::is_same_v<T, DeleteEvent>) {
          return "D " + std::to_string(e.id);
        } else {
          return "U " + std::to_string(e.id) + ' ' + format_real(e.w);
        }
      },
      event);
}

std::string format_trace(const std::vector<Event>& events) {
  std::string out;
  for (const Event& e : events) out += format_event(e) + '\n';
  return out;
}

}  // namespace dronecover
