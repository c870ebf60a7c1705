#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "regions/state.hpp"

namespace regions {

struct BaseEmbedding {
  std::int64_t genus = 0;
  bool operator==(const BaseEmbedding&) const = default;
};
struct BaseBoy {
  bool operator==(const BaseBoy&) const = default;
};
struct BaseN2 {
  bool operator==(const BaseN2&) const = default;
};
using BaseOp = std::variant<BaseEmbedding, BaseBoy, BaseN2>;

struct BubbleStep {
  RegionId target = 0;
  bool operator==(const BubbleStep&) const = default;
};
struct RingStep {
  RegionId host = 0;
  bool operator==(const RingStep&) const = default;
};
struct GOpStep {
  RegionPair pair;
  std::int64_t handles = 0;
  bool operator==(const GOpStep&) const = default;
};
struct ConnectBoyStep {
  RegionPair pair;
  bool operator==(const ConnectBoyStep&) const = default;
};
struct ConnectN2Step {
  RegionPair pair;
  bool operator==(const ConnectN2Step&) const = default;
};
struct SwapColorsStep {
  bool operator==(const SwapColorsStep&) const = default;
};
using ConstructionStep = std::variant<BubbleStep, RingStep, GOpStep, ConnectBoyStep,
                                      ConnectN2Step, SwapColorsStep>;

// A replayable certificate that some immersion realizes the claimed
// data: a base state plus an ordered list of construction steps. Region
// ids are assigned in replay order, so traces are portable across
// implementations.
struct ConstructionTrace {
  BaseOp base;
  std::vector<ConstructionStep> steps;
  ImmersionData claimed;

  bool operator==(const ConstructionTrace&) const = default;
};

/// Materialize the base state. Throws StateError{BaseInvalid} on a
/// malformed base (negative genus).
SymbolicState build_base(const BaseOp& base);

/// Apply one construction step through the matching transformer.
SymbolicState apply_step(const SymbolicState& st, const ConstructionStep& step);

}  // namespace regions
