#include "regions/planner.hpp"

#include <optional>
#include <sstream>
#include <utility>

namespace regions {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// The synthesis works the induction backwards. A reduction strips one
// construction step's worth of data and is replayed in reverse order on
// top of the terminal base; each reduction lowers the measure
// N + total(black) + total(white) by at least one.
struct RedBubble {
  Color side;       // which census loses a 3-cell plus a class-r region
  std::int64_t r;   // the class merged into class r-1
};
struct RedBoy {};   // one triple point traded for chi + 1
struct RedRingPair {
  std::int64_t p;   // one class-p region dropped per color
};
struct RedCross {
  std::int64_t r;   // class taken from the side acting as black
  std::int64_t s;   // class taken from the side acting as white, s > r
  bool swapped;     // roles were color-swapped; emit SwapColors after
};
using Reduction = std::variant<RedBubble, RedBoy, RedRingPair, RedCross>;

struct TermEmbedding {
  std::int64_t genus;
};
struct TermTorusRings {
  std::int64_t rings_in_white;  // black solid tori to add
  std::int64_t rings_in_black;  // white solid tori to add
};
struct TermEvenChain {
  std::int64_t n;
};
using Terminal = std::variant<TermEmbedding, TermTorusRings, TermEvenChain>;

std::int64_t measure_of(const ImmersionData& d) {
  return d.triple_points + total_count(d.black) + total_count(d.white);
}

std::optional<std::int64_t> largest_key_geq1(const RegionSpectrum& s) {
  if (s.empty()) return std::nullopt;
  const auto& m = s.counts();
  const std::int64_t k = m.rbegin()->first;
  if (k >= 1) return k;
  return std::nullopt;
}

// Smallest (r, s) with r in supp(a_side), s in supp(b_side), r < s.
std::optional<std::pair<std::int64_t, std::int64_t>> smallest_cross(
    const RegionSpectrum& a_side, const RegionSpectrum& b_side) {
  for (const auto& [r, cnt] : a_side.counts()) {
    auto it = b_side.counts().upper_bound(r);
    if (it != b_side.counts().end()) {
      return std::make_pair(r, it->first);
    }
  }
  return std::nullopt;
}

RegionId lowest_region_with(const SymbolicState& st, Color color, std::int64_t euler) {
  for (const auto& [id, r] : st.regions) {
    if (r.color == color && r.euler == euler) return id;
  }
  std::ostringstream msg;
  msg << "planner: no " << to_string(color) << " region with euler " << euler
      << " in the partial construction";
  throw std::logic_error(msg.str());
}

RegionId lowest_region(const SymbolicState& st) {
  if (st.regions.empty()) throw std::logic_error("planner: empty state");
  return st.regions.begin()->first;
}

RegionPair first_certified(const SymbolicState& st) {
  if (st.certified_pairs.empty()) {
    throw std::logic_error("planner: no certified pair in the partial construction");
  }
  return *st.certified_pairs.begin();
}

std::optional<RejectionReport> reject(const ImmersionData& d) {
  const std::int64_t doubled_black = 2 * weighted_sum(d.black);
  const std::int64_t doubled_white = 2 * weighted_sum(d.white);
  const std::int64_t chi_plus_n = d.surface_euler + d.triple_points;
  RejectionReport rep;
  rep.doubled_black = doubled_black;
  rep.doubled_white = doubled_white;
  rep.chi_plus_n = chi_plus_n;
  if (d.black.empty()) {
    rep.kind = RejectionReport::Kind::BlackSpectrumEmpty;
    rep.reason = "black spectrum is identically 0";
    return rep;
  }
  if (d.white.empty()) {
    rep.kind = RejectionReport::Kind::WhiteSpectrumEmpty;
    rep.reason = "white spectrum is identically 0";
    return rep;
  }
  if (d.surface_euler > 2) {
    rep.kind = RejectionReport::Kind::SurfaceEulerTooLarge;
    rep.reason = "surface euler characteristic " + std::to_string(d.surface_euler) +
                 " exceeds 2";
    return rep;
  }
  if (d.triple_points < 0) {
    rep.kind = RejectionReport::Kind::NegativeTriplePoints;
    rep.reason = "triple point count " + std::to_string(d.triple_points) + " is negative";
    return rep;
  }
  if (doubled_black != chi_plus_n || doubled_white != chi_plus_n) {
    rep.kind = RejectionReport::Kind::EquationMismatch;
    std::ostringstream msg;
    msg << "doubled weighted sums " << doubled_black << " (black) and " << doubled_white
        << " (white) must both equal chi + N = " << chi_plus_n;
    rep.reason = msg.str();
    return rep;
  }
  return std::nullopt;
}

// Strip reductions off the data until a base case remains. Every
// iteration must keep the data realizable and strictly shrink the
// measure; both are asserted.
Terminal reduce(ImmersionData cur, std::vector<Reduction>& reductions) {
  std::int64_t prev_measure = measure_of(cur) + 1;
  for (;;) {
    const std::int64_t m = measure_of(cur);
    if (m >= prev_measure) {
      throw std::logic_error("planner: reduction measure failed to decrease");
    }
    prev_measure = m;
    if (!is_realizable(cur)) {
      throw std::logic_error("planner: reduction produced non-realizable data");
    }

    // A side holding both 3-cells and handled regions sheds one of each:
    // the replayed bubble turns a class r-1 region into a class r region
    // plus a fresh 3-cell. Black first, largest r first.
    if (cur.black.count(0) >= 1) {
      if (auto r = largest_key_geq1(cur.black)) {
        cur.black.remove(0);
        cur.black.remove(*r);
        cur.black.add(*r - 1);
        reductions.push_back(RedBubble{Color::Black, *r});
        continue;
      }
    }
    if (cur.white.count(0) >= 1) {
      if (auto r = largest_key_geq1(cur.white)) {
        cur.white.remove(0);
        cur.white.remove(*r);
        cur.white.add(*r - 1);
        reductions.push_back(RedBubble{Color::White, *r});
        continue;
      }
    }

    // Now each census is either all 3-cells or free of 3-cells, and the
    // equation forces both sides into the same shape.
    const bool black_cells_only = cur.black.count(0) >= 1;
    const bool white_cells_only = cur.white.count(0) >= 1;
    if (black_cells_only != white_cells_only) {
      throw std::logic_error("planner: censuses disagree on 3-cell content for realizable data");
    }

    if (black_cells_only) {
      // Every region is a 3-cell.
      if (cur.surface_euler < 2) {
        cur.surface_euler += 1;
        cur.triple_points -= 1;
        reductions.push_back(RedBoy{});
        continue;
      }
      if (cur.triple_points == 0) {
        return TermEmbedding{0};
      }
      if (cur.triple_points % 2 != 0) {
        throw std::logic_error("planner: odd triple point count on the sphere");
      }
      return TermEvenChain{cur.triple_points};
    }

    // No 3-cells on either side.
    if (cur.triple_points >= 1) {
      cur.surface_euler += 1;
      cur.triple_points -= 1;
      reductions.push_back(RedBoy{});
      continue;
    }

    const auto& ca = cur.black.counts();
    const auto& cb = cur.white.counts();
    if (ca.size() == 1 && cb.size() == 1 && ca.begin()->first == cb.begin()->first) {
      const std::int64_t p = ca.begin()->first;
      if (p == 1) {
        return TermTorusRings{ca.begin()->second - 1, cb.begin()->second - 1};
      }
      const std::int64_t count = ca.begin()->second;
      if (count != cb.begin()->second) {
        throw std::logic_error("planner: unequal counts in the common singleton case");
      }
      if (count == 1) {
        return TermEmbedding{p};
      }
      cur.black.remove(p);
      cur.white.remove(p);
      cur.surface_euler += 2 * (p - 1);
      reductions.push_back(RedRingPair{p});
      continue;
    }

    // Mixed supports: take a class r from one side and a class s > r
    // from the other. When only r > s pairs exist the construction runs
    // with the colors swapped and a SwapColors step restores them.
    bool swapped = false;
    auto rs = smallest_cross(cur.black, cur.white);
    if (!rs) {
      swapped = true;
      rs = smallest_cross(cur.white, cur.black);
    }
    if (!rs) {
      throw std::logic_error("planner: no cross pair in the mixed-support case");
    }
    const auto [r, s] = *rs;
    RegionSpectrum acting_black = swapped ? cur.white : cur.black;
    RegionSpectrum acting_white = swapped ? cur.black : cur.white;
    acting_black.remove(r);
    acting_white.remove(s);
    acting_white.add(s - r + 1);
    cur.black = std::move(acting_black);
    cur.white = std::move(acting_white);
    cur.surface_euler += 2 * (r - 1);
    reductions.push_back(RedCross{r, s, swapped});
  }
}

}  // namespace

ConstructionTrace plan(const ImmersionData& d) {
  if (auto rep = reject(d)) {
    throw NotRealizableError(*rep);
  }

  std::vector<Reduction> reductions;
  const Terminal terminal = reduce(d, reductions);

  ConstructionTrace trace;
  trace.claimed = d;
  SymbolicState st;

  std::visit(overloaded{
                 [&](const TermEmbedding& t) {
                   trace.base = BaseEmbedding{t.genus};
                   st = base_embedding(t.genus);
                 },
                 [&](const TermTorusRings& t) {
                   trace.base = BaseEmbedding{1};
                   st = base_embedding(1);
                   const RegionId black_host = lowest_region_with(st, Color::Black, 0);
                   const RegionId white_host = lowest_region_with(st, Color::White, 0);
                   for (std::int64_t i = 0; i < t.rings_in_white; ++i) {
                     trace.steps.push_back(RingStep{white_host});
                     st = ring(st, white_host);
                   }
                   for (std::int64_t i = 0; i < t.rings_in_black; ++i) {
                     trace.steps.push_back(RingStep{black_host});
                     st = ring(st, black_host);
                   }
                 },
                 [&](const TermEvenChain& t) {
                   trace.base = BaseN2{};
                   st = base_n2();
                   const RegionPair pair = first_certified(st);
                   for (std::int64_t i = 0; i < t.n / 2 - 1; ++i) {
                     trace.steps.push_back(ConnectN2Step{pair});
                     st = connect_n2(st, pair);
                   }
                 },
             },
             terminal);

  for (auto it = reductions.rbegin(); it != reductions.rend(); ++it) {
    std::visit(
        overloaded{
            [&](const RedBubble& red) {
              const RegionId target = lowest_region_with(st, red.side, 2 - red.r);
              trace.steps.push_back(BubbleStep{target});
              st = bubble(st, target);
            },
            [&](const RedBoy&) {
              const RegionPair pair = first_certified(st);
              trace.steps.push_back(ConnectBoyStep{pair});
              st = connect_boy(st, pair);
            },
            [&](const RedRingPair& red) {
              const RegionId host = lowest_region(st);
              const RegionId u = st.next_id;
              trace.steps.push_back(RingStep{host});
              st = ring(st, host);
              const RegionId v = st.next_id;
              trace.steps.push_back(RingStep{u});
              st = ring(st, u);
              const RegionPair pair = make_region_pair(u, v);
              trace.steps.push_back(GOpStep{pair, red.p - 1});
              st = g_operation(st, pair, red.p - 1);
            },
            [&](const RedCross& red) {
              const RegionId host = lowest_region_with(st, Color::White, red.r - red.s);
              const RegionId torus = st.next_id;
              trace.steps.push_back(RingStep{host});
              st = ring(st, host);
              const RegionPair pair = make_region_pair(host, torus);
              trace.steps.push_back(GOpStep{pair, red.r - 1});
              st = g_operation(st, pair, red.r - 1);
              if (red.swapped) {
                trace.steps.push_back(SwapColorsStep{});
                st = swap_colors(st);
              }
            },
        },
        *it);
  }

  if (derive_data(st) != d) {
    throw std::logic_error("planner: construction does not realize the requested data");
  }
  if (static_cast<std::int64_t>(trace.steps.size()) > 4 * measure_of(d) + 4) {
    throw std::logic_error("planner: trace length exceeds the regression bound");
  }
  return trace;
}

std::variant<ConstructionTrace, RejectionReport> plan_or_explain(const ImmersionData& d) {
  if (auto rep = reject(d)) {
    return *rep;
  }
  return plan(d);
}

}  // namespace regions
