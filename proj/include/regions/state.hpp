#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "regions/spectrum.hpp"

namespace regions {

enum class Color : std::uint8_t { Black, White };

Color opposite(Color c);
const char* to_string(Color c);

// Region ids are allocated sequentially from 0 within one state lineage
// and never reused.
using RegionId = std::int32_t;

// One complementary region. Any valid state keeps euler <= 1: a region's
// boundary is connected, so its Euler characteristic cannot exceed 1.
struct Region {
  RegionId id = 0;
  Color color = Color::Black;
  std::int64_t euler = 1;

  bool operator==(const Region&) const = default;
};

// Unordered pair of distinct region ids, stored normalized (lo < hi).
struct RegionPair {
  RegionId lo = 0;
  RegionId hi = 0;

  auto operator<=>(const RegionPair&) const = default;
};

RegionPair make_region_pair(RegionId a, RegionId b);

enum class FaultKind : std::uint8_t {
  UnknownRegion,
  UncertifiedPair,
  ColorRuleViolated,
  EulerBoundViolated,
  EquationViolated,
  BaseInvalid,
};

const char* to_string(FaultKind k);

// One failed invariant in a state audit.
struct Fault {
  FaultKind kind = FaultKind::EquationViolated;
  std::string message;
  std::vector<RegionId> regions;  // offending ids, possibly empty
};

// Precondition violation raised by a transformer.
class StateError : public std::runtime_error {
 public:
  StateError(FaultKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] FaultKind kind() const { return kind_; }

 private:
  FaultKind kind_;
};

// Combinatorial stand-in for a generic immersion of a closed surface
// into S^3: the region census with checkerboard colors and Euler
// characteristics, chi of the surface, the triple-point count, and the
// set of region pairs certified adjacent along a disc free of the
// intersection set. Valid states keep every region euler <= 1, at least
// one region of each color, certified pairs live and opposite-colored,
// and equal per-color euler sums whose double is
// surface_euler + triple_points.
struct SymbolicState {
  std::map<RegionId, Region> regions;
  std::int64_t surface_euler = 0;
  std::int64_t triple_points = 0;
  std::set<RegionPair> certified_pairs;
  bool orientable = true;
  RegionId next_id = 0;

  [[nodiscard]] const Region* find(RegionId id) const;
  [[nodiscard]] const Region& at(RegionId id) const;  // throws StateError{UnknownRegion}
  [[nodiscard]] bool certified(const RegionPair& p) const;
  [[nodiscard]] std::int64_t euler_sum(Color c) const;
  [[nodiscard]] std::int64_t region_count(Color c) const;
  RegionId add_region(Color c, std::int64_t euler);

  bool operator==(const SymbolicState&) const = default;
};

// Base states.

/// Standard embedding of the orientable genus-g surface: two regions of
/// euler 1-g forming one certified pair, chi(F) = 2-2g, no triple points.
SymbolicState base_embedding(std::int64_t genus);

/// Boy's surface: two 3-cell regions, one certified pair, chi(F) = 1,
/// one triple point, non-orientable.
SymbolicState base_boy();

/// Sphere immersion with two triple points and four 3-cell regions, two
/// of each color; exactly one certified pair.
SymbolicState base_n2();

// Construction transformers. All are pure: the input is copied and the
// result returned; states may be shared freely.

/// Pinch a disc on the target's boundary: the target loses one from its
/// euler and a new same-colored 3-cell appears (no certificate).
SymbolicState bubble(const SymbolicState& st, RegionId target);

/// Add a ring inside the host region: a new solid-torus region (euler 0)
/// of the opposite color appears, certified adjacent to the host.
SymbolicState ring(const SymbolicState& st, RegionId host);

/// Add g handles across the disc certifying the pair: both regions lose
/// g from their euler, chi(F) drops by 2g. g = 0 does nothing.
SymbolicState g_operation(const SymbolicState& st, const RegionPair& pair, std::int64_t g);

/// Connect-sum with Boy's surface along the certified pair: chi(F) drops
/// by 1, one triple point is added, the census is unchanged (each new
/// 3-cell merges into one member of the pair along a disc), and the
/// result is non-orientable.
SymbolicState connect_boy(const SymbolicState& st, const RegionPair& pair);

/// Connect-sum with the two-triple-point sphere along the certified
/// pair: chi(F) is unchanged, two triple points are added, and one new
/// 3-cell of each color appears (uncertified).
SymbolicState connect_n2(const SymbolicState& st, const RegionPair& pair);

/// Relabel every region with the opposite color (the checkerboard
/// coloring's basepoint choice).
SymbolicState swap_colors(const SymbolicState& st);

/// The census of the state: black and white spectra keyed by 1 - euler,
/// plus chi(F) and the triple-point count.
ImmersionData derive_data(const SymbolicState& st);

/// Full invariant audit. Empty result means the state is valid; each
/// entry names the violated invariant and the offending region ids.
std::vector<Fault> check_state(const SymbolicState& st);

}  // namespace regions
