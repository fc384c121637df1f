#include "dronecover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "dronecover/errors.hpp"

namespace dronecover {

namespace {

using Mask = std::uint32_t;

struct Candidate {
  Mask mask = 0;
  ShapeGeometry geometry;
};

/// Weight of every subset of the first n points, summed in index order.
std::vector<double> subset_weights(std::span<const double> weights) {
  const std::size_t n = weights.size();
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (Mask mask = 1; mask < table.size(); ++mask) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (Mask{1} << i)) total += weights[i];
    }
    table[mask] = total;
  }
  return table;
}

/// Drops candidates whose mask repeats an earlier one; order is preserved.
std::vector<Candidate> unique_masks(std::vector<Candidate> cands) {
  std::unordered_set<Mask> seen;
  std::vector<Candidate> out;
  for (Candidate& c : cands) {
    if (seen.insert(c.mask).second) out.push_back(std::move(c));
  }
  return out;
}

struct Choice {
  double weight = 0.0;
  std::vector<std::size_t> picks;
};

/// Best union over k-subsets of candidates, k = min(m, #candidates). The
/// first maximum in lexicographic order wins.
Choice best_union(const std::vector<Mask>& masks,
                  const std::vector<double>& weight_of, std::uint32_t m) {
  Choice best;
  const std::size_t k = std::min<std::size_t>(m, masks.size());
  if (k == 0) return best;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  bool first = true;
  while (true) {
    Mask u = 0;
    for (std::size_t i : idx) u |= masks[i];
    if (first || weight_of[u] > best.weight) {
      best.weight = weight_of[u];
      best.picks = idx;
      first = false;
    }
    // Next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == masks.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return best;
}

OracleResult solve(std::span<const Point> points, std::uint32_t m,
                   std::vector<Candidate> cands) {
  std::vector<double> weights;
  weights.reserve(points.size());
  for (const Point& p : points) weights.push_back(p.w);
  const std::vector<double> weight_of = subset_weights(weights);

  cands = unique_masks(std::move(cands));
  std::vector<Mask> masks;
  masks.reserve(cands.size());
  for (const Candidate& c : cands) masks.push_back(c.mask);

  const Choice best = best_union(masks, weight_of, m);
  OracleResult out;
  out.opt_weight = best.weight;
  out.n = points.size();
  out.m = m;
  for (std::size_t i : best.picks) out.witness.push_back(cands[i].geometry);
  return out;
}

void guard(std::size_t n, std::uint32_t m, std::size_t max_n,
           std::uint32_t max_m, const char* what) {
  if (n > max_n || m > max_m) {
    throw SizeGuardError(std::string(what) + ": instance too large (n=" +
                         std::to_string(n) + ", m=" + std::to_string(m) +
                         "; limit n<=" + std::to_string(max_n) +
                         ", m<=" + std::to_string(max_m) + ")");
  }
}

void check_points(std::span<const Point> points, double r_cov) {
  if (!std::isfinite(r_cov) || r_cov <= 0.0) {
    throw std::invalid_argument("r_cov must be positive and finite");
  }
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("coordinates must be finite");
    }
    if (!std::isfinite(p.w) || p.w < 0.0) {
      throw std::invalid_argument("weight must be finite and non-negative");
    }
  }
}

}  // namespace

OracleResult exact_square_opt(std::span<const Point> points, double r_cov,
                              std::uint32_t m) {
  guard(points.size(), m, kSquareOracleMaxPoints, kSquareOracleMaxShapes,
        "exact_square_opt");
  check_points(points, r_cov);
  const double side = 2.0 * r_cov;
  std::vector<Candidate> cands;
  cands.reserve(points.size() * points.size());
  for (const Point& px : points) {
    for (const Point& py : points) {
      const SquareGeometry sq{Coord{px.x, py.y}, side};
      Mask mask = 0;
      for (std::size_t k = 0; k < points.size(); ++k) {
        if (sq.contains(Coord{points[k].x, points[k].y})) mask |= Mask{1} << k;
      }
      cands.push_back(Candidate{mask, sq});
    }
  }
  return solve(points, m, std::move(cands));
}

OracleResult exact_disk_opt(std::span<const Point> points, double r_cov,
                            std::uint32_t m) {
  guard(points.size(), m, kDiskOracleMaxPoints, kDiskOracleMaxShapes,
        "exact_disk_opt");
  check_points(points, r_cov);
  std::vector<Coord> centers;
  for (const Point& p : points) centers.push_back(Coord{p.x, p.y});
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dx = points[j].x - points[i].x;
      const double dy = points[j].y - points[i].y;
      const double d = std::hypot(dx, dy);
      if (d == 0.0 || d > 2.0 * r_cov) continue;
      const double half = d / 2.0;
      const double h = std::sqrt(std::max(0.0, r_cov * r_cov - half * half));
      const Coord mid{points[i].x + dx / 2.0, points[i].y + dy / 2.0};
      const Coord perp{-dy / d, dx / d};
      centers.push_back(Coord{mid.x + h * perp.x, mid.y + h * perp.y});
      centers.push_back(Coord{mid.x - h * perp.x, mid.y - h * perp.y});
    }
  }

  const double reach = r_cov * (1.0 + kDiskBoundarySlack);
  std::vector<Candidate> cands;
  cands.reserve(centers.size());
  for (const Coord& c : centers) {
    const DiskGeometry probe{c, reach};
    Mask mask = 0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (probe.contains(Coord{points[k].x, points[k].y})) mask |= Mask{1} << k;
    }
    cands.push_back(Candidate{mask, DiskGeometry{c, r_cov}});
  }
  return solve(points, m, std::move(cands));
}

double exact_mwpihp(const IntervalInstance& instance) {
  guard(instance.size(), instance.budget(), kIntervalOracleMaxItems,
        kIntervalOracleMaxPoints, "exact_mwpihp");
  const auto items = instance.items();
  std::vector<double> weights;
  std::vector<Mask> masks;
  for (const WeightedInterval& it : items) weights.push_back(it.weight);
  for (const WeightedInterval& at : items) {
    Mask mask = 0;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (pierces(items[k].left, instance.length(), at.left)) {
        mask |= Mask{1} << k;
      }
    }
    masks.push_back(mask);
  }
  return best_union(masks, subset_weights(weights), instance.budget()).weight;
}

}  // namespace dronecover
