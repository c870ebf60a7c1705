#include "regions/spectrum.hpp"

#include <stdexcept>

namespace regions {

RegionSpectrum::RegionSpectrum(
    std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries) {
  for (const auto& [k, n] : entries) {
    add(k, n);
  }
}

void RegionSpectrum::add(std::int64_t k, std::int64_t n) {
  if (k < 0) {
    throw std::invalid_argument("RegionSpectrum::add: key must be >= 0");
  }
  if (n <= 0) {
    throw std::invalid_argument("RegionSpectrum::add: count must be positive");
  }
  counts_[k] += n;
}

void RegionSpectrum::remove(std::int64_t k, std::int64_t n) {
  if (n <= 0) {
    throw std::invalid_argument("RegionSpectrum::remove: count must be positive");
  }
  auto it = counts_.find(k);
  if (it == counts_.end() || it->second < n) {
    throw std::invalid_argument("RegionSpectrum::remove: fewer regions stored than removed");
  }
  it->second -= n;
  if (it->second == 0) {
    counts_.erase(it);
  }
}

std::int64_t RegionSpectrum::count(std::int64_t k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

RegionSpectrum operator+(const RegionSpectrum& lhs, const RegionSpectrum& rhs) {
  RegionSpectrum out = lhs;
  for (const auto& [k, n] : rhs.counts()) {
    out.add(k, n);
  }
  return out;
}

std::int64_t weighted_sum(const RegionSpectrum& s) {
  std::int64_t sum = 0;
  for (const auto& [k, n] : s.counts()) {
    sum += (1 - k) * n;
  }
  return sum;
}

std::int64_t total_count(const RegionSpectrum& s) {
  std::int64_t sum = 0;
  for (const auto& [k, n] : s.counts()) {
    sum += n;
  }
  return sum;
}

bool is_realizable(const ImmersionData& d) {
  if (d.black.empty() || d.white.empty()) {
    return false;
  }
  if (d.surface_euler > 2 || d.triple_points < 0) {
    return false;
  }
  const std::int64_t rhs = d.surface_euler + d.triple_points;
  return 2 * weighted_sum(d.black) == rhs && 2 * weighted_sum(d.white) == rhs;
}

std::int64_t euler_of_image(const ImmersionData& d) {
  if (!is_realizable(d)) {
    throw std::invalid_argument("euler_of_image: data is not realizable");
  }
  return weighted_sum(d.black) + weighted_sum(d.white);
}

}  // namespace regions
