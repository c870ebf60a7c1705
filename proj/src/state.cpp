#include "regions/state.hpp"

#include <sstream>

namespace regions {

Color opposite(Color c) {
  return c == Color::Black ? Color::White : Color::Black;
}

const char* to_string(Color c) {
  return c == Color::Black ? "black" : "white";
}

const char* to_string(FaultKind k) {
  switch (k) {
    case FaultKind::UnknownRegion: return "unknown_region";
    case FaultKind::UncertifiedPair: return "uncertified_pair";
    case FaultKind::ColorRuleViolated: return "color_rule_violated";
    case FaultKind::EulerBoundViolated: return "euler_bound_violated";
    case FaultKind::EquationViolated: return "equation_violated";
    case FaultKind::BaseInvalid: return "base_invalid";
  }
  return "unknown_fault";
}

RegionPair make_region_pair(RegionId a, RegionId b) {
  if (a == b) {
    throw StateError(FaultKind::UncertifiedPair, "region pair must join two distinct regions");
  }
  return a < b ? RegionPair{a, b} : RegionPair{b, a};
}

const Region* SymbolicState::find(RegionId id) const {
  auto it = regions.find(id);
  return it == regions.end() ? nullptr : &it->second;
}

const Region& SymbolicState::at(RegionId id) const {
  const Region* r = find(id);
  if (r == nullptr) {
    throw StateError(FaultKind::UnknownRegion,
                     "unknown region id " + std::to_string(id));
  }
  return *r;
}

bool SymbolicState::certified(const RegionPair& p) const {
  return certified_pairs.count(p) > 0;
}

std::int64_t SymbolicState::euler_sum(Color c) const {
  std::int64_t sum = 0;
  for (const auto& [id, r] : regions) {
    if (r.color == c) sum += r.euler;
  }
  return sum;
}

std::int64_t SymbolicState::region_count(Color c) const {
  std::int64_t n = 0;
  for (const auto& [id, r] : regions) {
    if (r.color == c) ++n;
  }
  return n;
}

RegionId SymbolicState::add_region(Color c, std::int64_t euler) {
  const RegionId id = next_id++;
  regions.emplace(id, Region{id, c, euler});
  return id;
}

SymbolicState base_embedding(std::int64_t genus) {
  if (genus < 0) {
    throw StateError(FaultKind::BaseInvalid, "base embedding: genus must be >= 0");
  }
  SymbolicState st;
  st.surface_euler = 2 - 2 * genus;
  st.triple_points = 0;
  st.orientable = true;
  const RegionId black = st.add_region(Color::Black, 1 - genus);
  const RegionId white = st.add_region(Color::White, 1 - genus);
  st.certified_pairs.insert(make_region_pair(black, white));
  return st;
}

SymbolicState base_boy() {
  SymbolicState st;
  st.surface_euler = 1;
  st.triple_points = 1;
  st.orientable = false;
  const RegionId black = st.add_region(Color::Black, 1);
  const RegionId white = st.add_region(Color::White, 1);
  st.certified_pairs.insert(make_region_pair(black, white));
  return st;
}

SymbolicState base_n2() {
  SymbolicState st;
  st.surface_euler = 2;
  st.triple_points = 2;
  st.orientable = true;
  const RegionId black = st.add_region(Color::Black, 1);
  const RegionId white = st.add_region(Color::White, 1);
  st.add_region(Color::Black, 1);
  st.add_region(Color::White, 1);
  // Only one black-white pair is known to merge cleanly; the other two
  // cells carry no certificate.
  st.certified_pairs.insert(make_region_pair(black, white));
  return st;
}

SymbolicState bubble(const SymbolicState& st, RegionId target) {
  const Region& t = st.at(target);
  SymbolicState out = st;
  out.regions[target].euler -= 1;
  out.add_region(t.color, 1);
  return out;
}

SymbolicState ring(const SymbolicState& st, RegionId host) {
  const Region& h = st.at(host);
  SymbolicState out = st;
  const RegionId torus = out.add_region(opposite(h.color), 0);
  out.certified_pairs.insert(make_region_pair(host, torus));
  return out;
}

SymbolicState g_operation(const SymbolicState& st, const RegionPair& pair, std::int64_t g) {
  if (g < 0) {
    throw StateError(FaultKind::BaseInvalid, "g-operation: handle count must be >= 0");
  }
  (void)st.at(pair.lo);
  (void)st.at(pair.hi);
  if (!st.certified(pair)) {
    throw StateError(FaultKind::UncertifiedPair,
                     "g-operation: pair (" + std::to_string(pair.lo) + ", " +
                         std::to_string(pair.hi) + ") is not certified");
  }
  SymbolicState out = st;
  out.regions[pair.lo].euler -= g;
  out.regions[pair.hi].euler -= g;
  out.surface_euler -= 2 * g;
  return out;
}

SymbolicState connect_boy(const SymbolicState& st, const RegionPair& pair) {
  (void)st.at(pair.lo);
  (void)st.at(pair.hi);
  if (!st.certified(pair)) {
    throw StateError(FaultKind::UncertifiedPair,
                     "connect_boy: pair (" + std::to_string(pair.lo) + ", " +
                         std::to_string(pair.hi) + ") is not certified");
  }
  // Each of the two new 3-cells merges into one member of the pair along
  // a disc, so the census is unchanged: chi(U glued to a 3-cell along a
  // disc) = chi(U) + 1 - 1.
  SymbolicState out = st;
  out.surface_euler -= 1;
  out.triple_points += 1;
  out.orientable = false;
  return out;
}

SymbolicState connect_n2(const SymbolicState& st, const RegionPair& pair) {
  (void)st.at(pair.lo);
  (void)st.at(pair.hi);
  if (!st.certified(pair)) {
    throw StateError(FaultKind::UncertifiedPair,
                     "connect_n2: pair (" + std::to_string(pair.lo) + ", " +
                         std::to_string(pair.hi) + ") is not certified");
  }
  SymbolicState out = st;
  // Summing with a sphere: chi(F) + 2 - 2.
  out.triple_points += 2;
  out.add_region(Color::Black, 1);
  out.add_region(Color::White, 1);
  return out;
}

SymbolicState swap_colors(const SymbolicState& st) {
  SymbolicState out = st;
  for (auto& [id, r] : out.regions) {
    r.color = opposite(r.color);
  }
  return out;
}

ImmersionData derive_data(const SymbolicState& st) {
  ImmersionData d;
  for (const auto& [id, r] : st.regions) {
    (r.color == Color::Black ? d.black : d.white).add(1 - r.euler);
  }
  d.surface_euler = st.surface_euler;
  d.triple_points = st.triple_points;
  return d;
}

std::vector<Fault> check_state(const SymbolicState& st) {
  std::vector<Fault> faults;

  for (const auto& [id, r] : st.regions) {
    if (r.euler > 1) {
      std::ostringstream msg;
      msg << "region " << id << " has euler " << r.euler
          << "; a complementary region has euler <= 1";
      faults.push_back({FaultKind::EulerBoundViolated, msg.str(), {id}});
    }
    if (id >= st.next_id) {
      faults.push_back({FaultKind::UnknownRegion,
                        "region " + std::to_string(id) + " is at or beyond the allocator watermark",
                        {id}});
    }
  }

  for (Color c : {Color::Black, Color::White}) {
    if (st.region_count(c) == 0) {
      faults.push_back({FaultKind::ColorRuleViolated,
                        std::string("no ") + to_string(c) + " region present",
                        {}});
    }
  }

  for (const RegionPair& p : st.certified_pairs) {
    const Region* lo = st.find(p.lo);
    const Region* hi = st.find(p.hi);
    if (lo == nullptr || hi == nullptr) {
      faults.push_back({FaultKind::UncertifiedPair,
                        "certified pair (" + std::to_string(p.lo) + ", " +
                            std::to_string(p.hi) + ") references a dead region",
                        {p.lo, p.hi}});
      continue;
    }
    if (lo->color == hi->color) {
      faults.push_back({FaultKind::UncertifiedPair,
                        "certified pair (" + std::to_string(p.lo) + ", " +
                            std::to_string(p.hi) + ") joins two regions of the same color",
                        {p.lo, p.hi}});
    }
  }

  const std::int64_t black_sum = st.euler_sum(Color::Black);
  const std::int64_t white_sum = st.euler_sum(Color::White);
  if (black_sum != white_sum) {
    std::ostringstream msg;
    msg << "black euler sum " << black_sum << " differs from white euler sum " << white_sum;
    faults.push_back({FaultKind::EquationViolated, msg.str(), {}});
  }
  if (2 * black_sum != st.surface_euler + st.triple_points) {
    std::ostringstream msg;
    msg << "doubled black euler sum " << 2 * black_sum << " differs from chi + N = "
        << st.surface_euler + st.triple_points;
    faults.push_back({FaultKind::EquationViolated, msg.str(), {}});
  }

  return faults;
}

}  // namespace regions
