#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dronecover/geometry.hpp"
#include "dronecover/interval_bound.hpp"
#include "dronecover/placement.hpp"

namespace dronecover {

// Exhaustive solvers for tiny instances. They serve as ground truth for the
// approximation and bound checks, not as practical solvers.

inline constexpr std::size_t kSquareOracleMaxPoints = 12;
inline constexpr std::uint32_t kSquareOracleMaxShapes = 3;
inline constexpr std::size_t kDiskOracleMaxPoints = 10;
inline constexpr std::uint32_t kDiskOracleMaxShapes = 2;
inline constexpr std::size_t kIntervalOracleMaxItems = 12;
inline constexpr std::uint32_t kIntervalOracleMaxPoints = 3;

/// Relative slack on the disk radius so that points placed on a candidate
/// circle by construction still count as covered.
inline constexpr double kDiskBoundarySlack = 1e-9;

struct OracleResult {
  double opt_weight = 0.0;
  std::vector<ShapeGeometry> witness;
  std::size_t n = 0;
  std::uint32_t m = 0;
};

/// Best union weight of m axis-parallel squares of side 2 r_cov, boundary
/// included. Candidates put the left edge on some point's x and the bottom
/// edge on some point's y, which loses no optimum. Throws SizeGuardError
/// for n > 12 or m > 3.
OracleResult exact_square_opt(std::span<const Point> points, double r_cov,
                              std::uint32_t m);

/// Best union weight of m disks of radius r_cov. Candidate centers are the
/// points themselves plus both radius-r_cov circles through every pair at
/// distance <= 2 r_cov. Throws SizeGuardError for n > 10 or m > 2.
OracleResult exact_disk_opt(std::span<const Point> points, double r_cov,
                            std::uint32_t m);

/// Best pierced weight over all choices of at most m left endpoints.
/// Throws SizeGuardError for n > 12 or m > 3.
double exact_mwpihp(const IntervalInstance& instance);

}  // namespace dronecover
