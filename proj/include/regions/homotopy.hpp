#pragma once

#include <cstdint>
#include <vector>

#include "regions/state.hpp"

namespace regions {

// The four codimension-one events a generic regular homotopy passes
// through. Arities: E, T and Q take one region id, H takes two (handle
// donor first, then receiver).
enum class MoveKind : std::uint8_t { E, H, T, Q };

const char* to_string(MoveKind k);

struct MoveEvent {
  MoveKind kind = MoveKind::E;
  std::vector<RegionId> args;

  bool operator==(const MoveEvent&) const = default;
};

// Doubled half-integer invariants: two_a = 2*chi(black union) - N and
// two_b likewise for white. Stored doubled so they stay exact integers.
// Constant under every E/H/T/Q move.
struct HalfInvariantPair {
  std::int64_t two_a = 0;
  std::int64_t two_b = 0;

  bool operator==(const HalfInvariantPair&) const = default;
};

HalfInvariantPair half_invariants(const SymbolicState& st);

/// E: a new 3-cell of the target's color appears and the target loses a
/// 2-handle. Same transformer as state bubble; kept as a separate entry
/// point for move simulation.
SymbolicState move_e(const SymbolicState& st, RegionId target);

/// H: a 1-handle moves from x to y. Both must share a color and x must
/// have a handle to give (euler <= 0). x == y is a net identity.
SymbolicState move_h(const SymbolicState& st, RegionId x, RegionId y);

/// T: the target loses a 1-handle, a 3-cell of the opposite color
/// appears, and two triple points are added.
SymbolicState move_t(const SymbolicState& st, RegionId target);

/// Q: a 3-cell vanishes and a fresh 3-cell of the same color appears.
/// Certificates naming the vanished region are dropped.
SymbolicState move_q(const SymbolicState& st, RegionId target);

/// Dispatch by kind after validating arity.
SymbolicState apply_move(const SymbolicState& st, const MoveEvent& ev);

}  // namespace regions
