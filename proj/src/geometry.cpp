#include "dronecover/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace dronecover {

std::string to_string(Shape shape) {
  return shape == Shape::square ? "square" : "disk";
}

Shape shape_from_string(const std::string& name) {
  if (name == "square") return Shape::square;
  if (name == "disk") return Shape::disk;
  throw std::invalid_argument("unknown shape '" + name + "'");
}

GridConfig GridConfig::make(double r_cov, Shape shape, std::uint32_t m) {
  if (!std::isfinite(r_cov) || r_cov <= 0.0) {
    throw std::invalid_argument("r_cov must be positive and finite");
  }
  if (m < 1) {
    throw std::invalid_argument("drone count m must be at least 1");
  }
  return GridConfig{r_cov, shape, m};
}

double GridConfig::cell_size() const noexcept {
  return shape == Shape::square ? 2.0 * r_cov : std::sqrt(2.0) * r_cov;
}

namespace {

std::int64_t floor_to_index(double v, double r) {
  const double q = std::floor(v / r);
  // 2^63 is exactly representable; anything at or beyond it does not fit.
  constexpr double limit = 9223372036854775808.0;
  if (!std::isfinite(q) || q >= limit || q < -limit) {
    throw std::invalid_argument("cell index out of 64-bit range");
  }
  return static_cast<std::int64_t>(q);
}

}  // namespace

CellIndex cell_index(Coord p, double r) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw std::invalid_argument("coordinates must be finite");
  }
  if (!std::isfinite(r) || r <= 0.0) {
    throw std::invalid_argument("cell size must be positive and finite");
  }
  return CellIndex{floor_to_index(p.x, r), floor_to_index(p.y, r)};
}

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = 0;
  std::uint64_t s1 = 0;
  std::uint64_t tri = 0;
  std::uint64_t value = 0;
  // Halve whichever of s, s + 1 is even before multiplying.
  const bool overflow =
      __builtin_add_overflow(a, b, &s) || __builtin_add_overflow(s, 1u, &s1) ||
      (s % 2 == 0 ? __builtin_mul_overflow(s / 2, s1, &tri)
                  : __builtin_mul_overflow(s, s1 / 2, &tri)) ||
      __builtin_add_overflow(tri, b, &value);
  if (overflow) {
    throw std::overflow_error("cantor_pair: result exceeds 64 bits");
  }
  return value;
}

CellKey cell_key(CellIndex ci) {
  return CellKey{cantor_pair(fold_signed(ci.a), fold_signed(ci.b))};
}

Coord cell_center(CellIndex ci, double r) noexcept {
  return Coord{(static_cast<double>(ci.a) + 0.5) * r,
               (static_cast<double>(ci.b) + 0.5) * r};
}

}  // namespace dronecover
