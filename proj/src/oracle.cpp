#include "regions/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace regions {

namespace {

void validate_bounds(const Bounds& b) {
  if (b.max_k < 0 || b.max_count < 0 || b.max_n < 0 || b.max_trace_len < 0 || b.min_chi > 2) {
    throw std::invalid_argument("Bounds: max_* must be >= 0 and min_chi <= 2");
  }
}

std::int64_t max_genus(const Bounds& b) {
  // chi(F) = 2 - 2g must stay at or above min_chi.
  return (2 - b.min_chi) / 2;
}

SymbolicState random_base(SplitMix64& rng, const Bounds& bounds, BaseOp* base_out) {
  switch (rng.below(3)) {
    case 0: {
      const std::int64_t genus = static_cast<std::int64_t>(rng.below(
          static_cast<std::uint64_t>(max_genus(bounds) + 1)));
      if (base_out != nullptr) *base_out = BaseEmbedding{genus};
      return base_embedding(genus);
    }
    case 1:
      if (base_out != nullptr) *base_out = BaseBoy{};
      return base_boy();
    default:
      if (base_out != nullptr) *base_out = BaseN2{};
      return base_n2();
  }
}

RegionId nth_region(const SymbolicState& st, std::uint64_t index) {
  auto it = st.regions.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(index));
  return it->first;
}

RegionPair nth_pair(const SymbolicState& st, std::uint64_t index) {
  auto it = st.certified_pairs.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(index));
  return *it;
}

}  // namespace

ConstructionTrace random_trace(std::uint64_t seed, const Bounds& bounds) {
  validate_bounds(bounds);
  SplitMix64 rng(seed);
  ConstructionTrace trace;
  SymbolicState st = random_base(rng, bounds, &trace.base);

  const std::uint64_t len = rng.below(static_cast<std::uint64_t>(bounds.max_trace_len) + 1);
  for (std::uint64_t i = 0; i < len; ++i) {
    ConstructionStep step;
    switch (rng.below(6)) {
      case 0:
        step = BubbleStep{nth_region(st, rng.below(st.regions.size()))};
        break;
      case 1:
        step = RingStep{nth_region(st, rng.below(st.regions.size()))};
        break;
      case 2:
        step = GOpStep{nth_pair(st, rng.below(st.certified_pairs.size())),
                       static_cast<std::int64_t>(rng.below(
                           static_cast<std::uint64_t>(bounds.max_k) + 1))};
        break;
      case 3:
        step = ConnectBoyStep{nth_pair(st, rng.below(st.certified_pairs.size()))};
        break;
      case 4:
        step = ConnectN2Step{nth_pair(st, rng.below(st.certified_pairs.size()))};
        break;
      default:
        step = SwapColorsStep{};
        break;
    }
    st = apply_step(st, step);
    trace.steps.push_back(step);
  }

  trace.claimed = derive_data(st);
  return trace;
}

bool within_data_bounds(const ImmersionData& d, const Bounds& bounds) {
  for (const RegionSpectrum* s : {&d.black, &d.white}) {
    if (!s->empty() && s->counts().rbegin()->first > bounds.max_k) return false;
    if (total_count(*s) > bounds.max_count) return false;
  }
  if (d.triple_points < 0 || d.triple_points > bounds.max_n) return false;
  if (d.surface_euler < bounds.min_chi || d.surface_euler > 2) return false;
  return true;
}

namespace {

// Exact dedup key for enumeration: (chi, N) plus a canonical encoding of
// the certificate graph with nodes labeled (color, euler). Two states
// with equal keys have label-isomorphic certificate structure, so their
// reachable data sets coincide; deduplicating by the label multiset
// alone is lossy (it merges states whose certified pairs differ, e.g. a
// torus certified against another torus versus against a 3-cell).
// Construction steps only ever attach leaf edges, so the certificate
// graph stays a forest and trees can be encoded by the minimum over
// their rootings.
std::string canonical_key(const SymbolicState& st) {
  std::map<RegionId, std::vector<RegionId>> adjacency;
  for (const auto& [id, r] : st.regions) {
    adjacency[id];
  }
  for (const RegionPair& p : st.certified_pairs) {
    adjacency[p.lo].push_back(p.hi);
    adjacency[p.hi].push_back(p.lo);
  }

  const auto label = [&](RegionId id) {
    const Region& r = st.regions.at(id);
    return std::string(r.color == Color::Black ? "B" : "W") + std::to_string(r.euler);
  };

  const std::function<std::string(RegionId, RegionId)> encode =
      [&](RegionId node, RegionId parent) {
        std::vector<std::string> children;
        for (RegionId neighbor : adjacency[node]) {
          if (neighbor != parent) children.push_back(encode(neighbor, node));
        }
        std::sort(children.begin(), children.end());
        std::string out = "(" + label(node);
        for (const std::string& child : children) out += child;
        out += ")";
        return out;
      };

  std::set<RegionId> pending;
  for (const auto& [id, r] : st.regions) pending.insert(id);

  std::vector<std::string> components;
  while (!pending.empty()) {
    std::vector<RegionId> component;
    std::deque<RegionId> queue{*pending.begin()};
    pending.erase(pending.begin());
    std::size_t edges = 0;
    while (!queue.empty()) {
      const RegionId node = queue.front();
      queue.pop_front();
      component.push_back(node);
      edges += adjacency[node].size();
      for (RegionId neighbor : adjacency[node]) {
        if (pending.erase(neighbor) > 0) queue.push_back(neighbor);
      }
    }
    if (edges / 2 != component.size() - 1) {
      throw std::logic_error("enumerate: certificate graph is not a forest");
    }
    std::string best;
    for (RegionId root : component) {
      std::string candidate = encode(root, -1);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
    components.push_back(std::move(best));
  }
  std::sort(components.begin(), components.end());

  std::string key = std::to_string(st.surface_euler) + "|" + std::to_string(st.triple_points);
  for (const std::string& c : components) key += "|" + c;
  return key;
}

void spectra_within(std::int64_t max_k, std::int64_t budget, std::int64_t key,
                    RegionSpectrum& partial, std::vector<RegionSpectrum>& out) {
  if (key > max_k) {
    if (!partial.empty()) out.push_back(partial);
    return;
  }
  for (std::int64_t n = 0; n <= budget; ++n) {
    if (n > 0) partial.add(key, n);
    spectra_within(max_k, budget - n, key + 1, partial, out);
    if (n > 0) partial.remove(key, n);
  }
}

}  // namespace

std::vector<ImmersionData> enumerate_data_box(const Bounds& bounds) {
  validate_bounds(bounds);
  std::vector<RegionSpectrum> spectra;
  RegionSpectrum scratch;
  spectra_within(bounds.max_k, bounds.max_count, 0, scratch, spectra);

  std::vector<ImmersionData> out;
  for (const RegionSpectrum& black : spectra) {
    for (const RegionSpectrum& white : spectra) {
      for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
        for (std::int64_t chi = bounds.min_chi; chi <= 2; ++chi) {
          out.push_back({black, white, chi, n});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ImmersionData> enumerate_realized(const Bounds& bounds) {
  validate_bounds(bounds);

  // Dead states can never re-enter the data box: region eulers, chi(F)
  // and per-color region counts move monotonically under every step, and
  // N never decreases.
  const auto dead = [&](const SymbolicState& st) {
    if (st.triple_points > bounds.max_n || st.surface_euler < bounds.min_chi) return true;
    if (st.region_count(Color::Black) > bounds.max_count ||
        st.region_count(Color::White) > bounds.max_count) {
      return true;
    }
    for (const auto& [id, r] : st.regions) {
      if (r.euler < 1 - bounds.max_k) return true;
    }
    return false;
  };

  std::set<std::string> visited;
  std::set<ImmersionData> realized;
  std::deque<std::pair<SymbolicState, std::int64_t>> frontier;

  const auto visit = [&](const SymbolicState& st, std::int64_t depth) {
    if (dead(st)) return;
    if (!visited.insert(canonical_key(st)).second) return;
    const ImmersionData d = derive_data(st);
    if (within_data_bounds(d, bounds)) realized.insert(d);
    if (depth < bounds.max_trace_len) frontier.emplace_back(st, depth);
  };

  for (std::int64_t g = 0; g <= max_genus(bounds); ++g) {
    visit(base_embedding(g), 0);
  }
  visit(base_boy(), 0);
  visit(base_n2(), 0);

  while (!frontier.empty()) {
    const auto [st, depth] = frontier.front();
    frontier.pop_front();

    for (const auto& [id, r] : st.regions) {
      visit(bubble(st, id), depth + 1);
    }
    for (const auto& [id, r] : st.regions) {
      visit(ring(st, id), depth + 1);
    }
    for (const RegionPair& pair : st.certified_pairs) {
      const std::int64_t lo_room = st.at(pair.lo).euler - (1 - bounds.max_k);
      const std::int64_t hi_room = st.at(pair.hi).euler - (1 - bounds.max_k);
      const std::int64_t chi_room = (st.surface_euler - bounds.min_chi) / 2;
      const std::int64_t g_max = std::min({lo_room, hi_room, chi_room});
      for (std::int64_t g = 1; g <= g_max; ++g) {
        visit(g_operation(st, pair, g), depth + 1);
      }
    }
    for (const RegionPair& pair : st.certified_pairs) {
      visit(connect_boy(st, pair), depth + 1);
    }
    for (const RegionPair& pair : st.certified_pairs) {
      visit(connect_n2(st, pair), depth + 1);
    }
    // SwapColors steps are not expanded: every trace has a color-mirrored
    // twin of the same length (bases are symmetric under an id-preserving
    // color flip, and the flip commutes with every step), so the swapped
    // data is collected by closing the result set instead.
  }

  std::set<ImmersionData> closed = realized;
  for (const ImmersionData& d : realized) {
    closed.insert({d.white, d.black, d.surface_euler, d.triple_points});
  }
  return {closed.begin(), closed.end()};
}

FuzzReport fuzz_homotopy(std::uint64_t seed, std::int64_t steps, const Bounds& bounds,
                         const StateObserver& observer) {
  validate_bounds(bounds);
  SplitMix64 rng(seed);
  SymbolicState st = random_base(rng, bounds, nullptr);

  FuzzReport report;
  report.per_move_counts = {{MoveKind::E, 0}, {MoveKind::H, 0}, {MoveKind::T, 0}, {MoveKind::Q, 0}};

  for (std::int64_t i = 0; i < steps; ++i) {
    // Candidate argument lists per kind, in fixed id order.
    std::vector<RegionId> all;
    std::vector<RegionId> handled;  // euler <= 0: has a 1-handle to remove
    std::vector<RegionId> cells;    // euler == 1
    for (const auto& [id, r] : st.regions) {
      all.push_back(id);
      if (r.euler <= 0) handled.push_back(id);
      if (r.euler == 1) cells.push_back(id);
    }
    std::vector<std::pair<RegionId, RegionId>> h_args;
    for (RegionId x : handled) {
      const Color cx = st.at(x).color;
      for (RegionId y : all) {
        if (st.at(y).color == cx) h_args.emplace_back(x, y);
      }
    }

    std::vector<MoveKind> kinds = {MoveKind::E};
    if (!h_args.empty()) kinds.push_back(MoveKind::H);
    if (!handled.empty()) kinds.push_back(MoveKind::T);
    if (!cells.empty()) kinds.push_back(MoveKind::Q);

    MoveEvent ev;
    ev.kind = kinds[rng.below(kinds.size())];
    switch (ev.kind) {
      case MoveKind::E:
        ev.args = {all[rng.below(all.size())]};
        break;
      case MoveKind::H: {
        const auto& [x, y] = h_args[rng.below(h_args.size())];
        ev.args = {x, y};
        break;
      }
      case MoveKind::T:
        ev.args = {handled[rng.below(handled.size())]};
        break;
      case MoveKind::Q:
        ev.args = {cells[rng.below(cells.size())]};
        break;
    }

    ++report.per_move_counts[ev.kind];
    ++report.trials;

    const HalfInvariantPair before = half_invariants(st);
    const std::int64_t chi_before = st.surface_euler;
    const std::int64_t n_before = st.triple_points;

    SymbolicState next;
    std::string failure;
    try {
      next = apply_move(st, ev);
    } catch (const std::exception& e) {
      failure = std::string("sampled move rejected: ") + e.what();
    }

    if (failure.empty()) {
      const HalfInvariantPair after = half_invariants(next);
      const std::int64_t expected_dn = ev.kind == MoveKind::T ? 2 : 0;
      if (after != before) {
        std::ostringstream msg;
        msg << "half invariants moved: (" << before.two_a << ", " << before.two_b << ") -> ("
            << after.two_a << ", " << after.two_b << ")";
        failure = msg.str();
      } else if (next.surface_euler != chi_before) {
        failure = "surface euler characteristic changed";
      } else if (next.triple_points != n_before + expected_dn) {
        failure = "triple point count moved by an unexpected amount";
      } else if (const auto faults = check_state(next); !faults.empty()) {
        failure = "state audit failed: " + faults.front().message;
      } else {
        const ImmersionData d = derive_data(next);
        if (weighted_sum(d.black) + weighted_sum(d.white) !=
            next.surface_euler + next.triple_points) {
          failure = "image euler characteristic differs from chi + N";
        }
      }
    }

    if (!failure.empty()) {
      report.failures.push_back({seed, i, ev, failure});
      continue;  // keep fuzzing from the last good state
    }
    st = std::move(next);
    if (observer) observer(st);
  }

  return report;
}

}  // namespace regions
