#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

namespace regions {

// Sparse census of complementary regions of one color: the count stored
// under key k is the number of regions with Euler characteristic 1-k.
// Keys are >= 0, stored counts are >= 1 (zero entries are never kept),
// support is finite.
class RegionSpectrum {
 public:
  RegionSpectrum() = default;
  RegionSpectrum(std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries);

  void add(std::int64_t k, std::int64_t n = 1);
  void remove(std::int64_t k, std::int64_t n = 1);
  [[nodiscard]] std::int64_t count(std::int64_t k) const;
  [[nodiscard]] bool empty() const { return counts_.empty(); }
  [[nodiscard]] const std::map<std::int64_t, std::int64_t>& counts() const { return counts_; }

  auto operator<=>(const RegionSpectrum&) const = default;

 private:
  std::map<std::int64_t, std::int64_t> counts_;
};

// Pointwise sum of two censuses.
RegionSpectrum operator+(const RegionSpectrum& lhs, const RegionSpectrum& rhs);

/// Sum of (1-k)*count over the support: the Euler characteristic of the
/// union of all regions of this color. Empty spectrum gives 0.
std::int64_t weighted_sum(const RegionSpectrum& s);

/// Number of regions in the census.
std::int64_t total_count(const RegionSpectrum& s);

// The numerical data attached to one immersion of a closed surface into
// S^3: the black and white region censuses, chi of the surface, and the
// triple-point count. Plain data; it may hold tuples no immersion
// realizes (the predicate below decides that).
struct ImmersionData {
  RegionSpectrum black;
  RegionSpectrum white;
  std::int64_t surface_euler = 2;
  std::int64_t triple_points = 0;

  auto operator<=>(const ImmersionData&) const = default;
};

/// True iff both censuses are nonempty, surface_euler <= 2,
/// triple_points >= 0, and both doubled weighted sums equal
/// surface_euler + triple_points. All arithmetic is exact; the half in
/// (chi + N)/2 is avoided by comparing doubled values.
bool is_realizable(const ImmersionData& d);

/// Euler characteristic of the immersed image:
/// weighted_sum(black) + weighted_sum(white). For realizable data this
/// equals surface_euler + triple_points. Throws std::invalid_argument on
/// non-realizable data.
std::int64_t euler_of_image(const ImmersionData& d);

}  // namespace regions
