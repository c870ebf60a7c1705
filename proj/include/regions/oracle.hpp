#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regions/homotopy.hpp"
#include "regions/trace.hpp"
#include "regions/verifier.hpp"

namespace regions {

// Sampling and enumeration box. max_k caps spectrum keys, max_count caps
// the number of regions of each color, max_n caps triple points, min_chi
// floors the surface euler characteristic, max_trace_len caps the number
// of steps after the base.
struct Bounds {
  std::int64_t max_k = 3;
  std::int64_t max_count = 3;
  std::int64_t max_n = 4;
  std::int64_t min_chi = -8;
  std::int64_t max_trace_len = 5;
};

// splitmix64; fixed and portable so seeds reproduce across
// implementations. Bounded draws reduce by plain modulo.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }

 private:
  std::uint64_t state_;
};

/// A random legal trace: random base, then up to max_trace_len steps
/// whose arguments are drawn from live ids and certified pairs only.
/// claimed is the derived data of its own replay, so
/// verify(t, t.claimed) holds by construction. Deterministic in seed.
ConstructionTrace random_trace(std::uint64_t seed, const Bounds& bounds);

/// True iff d lies inside the data box of the bounds.
bool within_data_bounds(const ImmersionData& d, const Bounds& bounds);

/// Every ImmersionData inside the data box (both spectra nonempty),
/// sorted. The realizable subset of this universe is what
/// enumerate_realized is compared against.
std::vector<ImmersionData> enumerate_data_box(const Bounds& bounds);

/// Breadth-first image of the construction grammar: the derived data of
/// every state reachable within max_trace_len steps, truncated to the
/// data box and sorted. States are deduplicated by (chi, N) plus the
/// canonical form of the certificate graph labeled by (color, euler),
/// which is exact: equal keys mean identical reachable data.
std::vector<ImmersionData> enumerate_realized(const Bounds& bounds);

struct FuzzFailure {
  std::uint64_t seed = 0;
  std::int64_t move_index = 0;
  MoveEvent move;
  std::string message;
};

struct FuzzReport {
  std::int64_t trials = 0;
  std::map<MoveKind, std::int64_t> per_move_counts;
  std::vector<FuzzFailure> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

// Optional per-state observer, called after every applied move.
using StateObserver = std::function<void(const SymbolicState&)>;

/// Apply `steps` random legal E/H/T/Q moves to a random base, checking
/// after each one that the doubled half-invariants are unchanged, the
/// state audit is clean, chi(F) is untouched and N moved by exactly the
/// move's contribution. Failures carry full reproduction data.
FuzzReport fuzz_homotopy(std::uint64_t seed, std::int64_t steps, const Bounds& bounds,
                         const StateObserver& observer = {});

}  // namespace regions
