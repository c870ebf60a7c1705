#pragma once

// Shared helpers for the test binaries: random realizable data and
// random valid states built through the public samplers.

#include <cstdint>

#include "regions/oracle.hpp"
#include "regions/spectrum.hpp"

namespace testsupport {

inline regions::RegionSpectrum random_spectrum(regions::SplitMix64& rng) {
  regions::RegionSpectrum s;
  const std::uint64_t entries = 1 + rng.below(3);
  for (std::uint64_t i = 0; i < entries; ++i) {
    s.add(static_cast<std::int64_t>(rng.below(5)), 1 + static_cast<std::int64_t>(rng.below(3)));
  }
  return s;
}

// Realizable by construction: the white side is patched to match the
// black weighted sum (k=0 regions add +1 each, k=2 regions add -1 each),
// then N is chosen so chi = 2*ws - N stays at or below 2.
inline regions::ImmersionData random_realizable(regions::SplitMix64& rng) {
  regions::ImmersionData d;
  d.black = random_spectrum(rng);
  d.white = random_spectrum(rng);
  const std::int64_t wb = regions::weighted_sum(d.black);
  const std::int64_t ww = regions::weighted_sum(d.white);
  if (ww < wb) {
    d.white.add(0, wb - ww);
  } else if (ww > wb) {
    d.white.add(2, ww - wb);
  }
  d.triple_points = static_cast<std::int64_t>(rng.below(4));
  d.surface_euler = 2 * wb - d.triple_points;
  if (d.surface_euler > 2) {
    d.triple_points = 2 * wb - 2;
    d.surface_euler = 2;
  }
  return d;
}

inline regions::SymbolicState random_valid_state(std::uint64_t seed) {
  regions::Bounds bounds;
  bounds.max_trace_len = 8;
  return regions::replay(regions::random_trace(seed, bounds));
}

}  // namespace testsupport
