#include "dronecover/workload.hpp"

#include <stdexcept>

namespace dronecover {

Workload::Workload(std::uint64_t seed, Options options)
    : rng_(seed), options_(options) {}

Point Workload::fresh_point() {
  std::uniform_real_distribution<double> coord(0.0, options_.extent);
  std::uniform_real_distribution<double> weight(0.0, options_.max_weight);
  Point p;
  p.id = next_id_++;
  p.x = coord(rng_);
  p.y = coord(rng_);
  p.w = weight(rng_);
  live_.push_back(p.id);
  return p;
}

std::vector<Point> Workload::points(std::size_t n) {
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fresh_point());
  return out;
}

std::vector<Event> Workload::events(std::size_t count, std::size_t max_live) {
  std::discrete_distribution<int> kind(
      {options_.insert_share, options_.delete_share, options_.update_share});
  std::uniform_real_distribution<double> weight(0.0, options_.max_weight);
  std::vector<Event> out;
  out.reserve(count);
  if (count > 0 && live_.empty() && max_live == 0) {
    throw std::invalid_argument("no event is possible with max_live == 0");
  }
  while (out.size() < count) {
    const int k = kind(rng_);
    if (k == 0) {
      if (live_.size() >= max_live) continue;
      out.push_back(InsertEvent{fresh_point()});
      continue;
    }
    if (live_.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, live_.size() - 1);
    const std::size_t slot = pick(rng_);
    if (k == 1) {
      out.push_back(DeleteEvent{live_[slot]});
      live_[slot] = live_.back();
      live_.pop_back();
    } else {
      out.push_back(UpdateEvent{live_[slot], weight(rng_)});
    }
  }
  return out;
}

}  // namespace dronecover
