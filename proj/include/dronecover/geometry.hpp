#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace dronecover {

using PointId = std::uint64_t;

/// A weighted user location. Coordinates in meters, weight in rank units.
struct Point {
  PointId id = 0;
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Coord {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

enum class Shape { square, disk };

std::string to_string(Shape shape);
Shape shape_from_string(const std::string& name);

/// Covering radius, shape kind and drone budget. The grid cell size follows
/// from the shape: squares tile the grid exactly, disks circumscribe a cell.
struct GridConfig {
  double r_cov = 1.0;
  Shape shape = Shape::square;
  std::uint32_t m = 1;

  /// Validated construction; throws std::invalid_argument.
  static GridConfig make(double r_cov, Shape shape, std::uint32_t m);

  double cell_size() const noexcept;

  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

/// Integer grid coordinates (floor(x / r), floor(y / r)).
struct CellIndex {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// Natural-number identity of a grid cell.
struct CellKey {
  std::uint64_t value = 0;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

/// Throws std::invalid_argument on non-finite input, r <= 0, or an index
/// outside the 64-bit range.
CellIndex cell_index(Coord p, double r);

/// Bijection from signed to unsigned integers: z >= 0 -> 2z, z < 0 -> -2z-1.
constexpr std::uint64_t fold_signed(std::int64_t z) noexcept {
  const auto u = static_cast<std::uint64_t>(z);
  return z >= 0 ? u << 1 : ((~u) << 1) | 1u;
}

constexpr std::int64_t unfold_signed(std::uint64_t n) noexcept {
  const std::uint64_t half = n >> 1;
  return (n & 1u) ? static_cast<std::int64_t>(~half)
                  : static_cast<std::int64_t>(half);
}

/// Cantor pairing (a+b+1)(a+b)/2 + b. Throws std::overflow_error when the
/// result does not fit in 64 bits.
std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b);

CellKey cell_key(CellIndex ci);

Coord cell_center(CellIndex ci, double r) noexcept;

}  // namespace dronecover

template <>
struct std::hash<dronecover::CellKey> {
  std::size_t operator()(dronecover::CellKey k) const noexcept {
    return std::hash<std::uint64_t>{}(k.value);
  }
};
