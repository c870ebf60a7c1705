#include "regions/homotopy.hpp"

#include <stdexcept>

namespace regions {

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::E: return "E";
    case MoveKind::H: return "H";
    case MoveKind::T: return "T";
    case MoveKind::Q: return "Q";
  }
  return "?";
}

HalfInvariantPair half_invariants(const SymbolicState& st) {
  return {2 * st.euler_sum(Color::Black) - st.triple_points,
          2 * st.euler_sum(Color::White) - st.triple_points};
}

SymbolicState move_e(const SymbolicState& st, RegionId target) {
  return bubble(st, target);
}

SymbolicState move_h(const SymbolicState& st, RegionId x, RegionId y) {
  const Region& rx = st.at(x);
  const Region& ry = st.at(y);
  if (rx.color != ry.color) {
    throw StateError(FaultKind::ColorRuleViolated,
                     "H move: both regions must have the same color");
  }
  if (rx.euler > 0) {
    throw StateError(FaultKind::EulerBoundViolated,
                     "H move: a 3-cell has no 1-handle to remove");
  }
  SymbolicState out = st;
  out.regions[x].euler += 1;
  out.regions[y].euler -= 1;
  return out;
}

SymbolicState move_t(const SymbolicState& st, RegionId target) {
  const Region& t = st.at(target);
  if (t.euler > 0) {
    throw StateError(FaultKind::EulerBoundViolated,
                     "T move: a 3-cell has no 1-handle to remove");
  }
  SymbolicState out = st;
  out.regions[target].euler += 1;
  out.add_region(opposite(t.color), 1);
  out.triple_points += 2;
  return out;
}

SymbolicState move_q(const SymbolicState& st, RegionId target) {
  const Region& t = st.at(target);
  if (t.euler != 1) {
    throw StateError(FaultKind::EulerBoundViolated,
                     "Q move: target must be a 3-cell (euler = 1)");
  }
  const Color color = t.color;
  SymbolicState out = st;
  out.regions.erase(target);
  for (auto it = out.certified_pairs.begin(); it != out.certified_pairs.end();) {
    if (it->lo == target || it->hi == target) {
      it = out.certified_pairs.erase(it);
    } else {
      ++it;
    }
  }
  out.add_region(color, 1);
  return out;
}

SymbolicState apply_move(const SymbolicState& st, const MoveEvent& ev) {
  const std::size_t arity = ev.kind == MoveKind::H ? 2 : 1;
  if (ev.args.size() != arity) {
    throw std::invalid_argument(std::string("move ") + to_string(ev.kind) +
                                " expects " + std::to_string(arity) + " argument(s)");
  }
  switch (ev.kind) {
    case MoveKind::E: return move_e(st, ev.args[0]);
    case MoveKind::H: return move_h(st, ev.args[0], ev.args[1]);
    case MoveKind::T: return move_t(st, ev.args[0]);
    case MoveKind::Q: return move_q(st, ev.args[0]);
  }
  throw std::invalid_argument("unknown move kind");
}

}  // namespace regions
