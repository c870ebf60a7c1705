#include "regions/trace.hpp"

namespace regions {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

SymbolicState build_base(const BaseOp& base) {
  return std::visit(overloaded{
                        [](const BaseEmbedding& b) { return base_embedding(b.genus); },
                        [](const BaseBoy&) { return base_boy(); },
                        [](const BaseN2&) { return base_n2(); },
                    },
                    base);
}

SymbolicState apply_step(const SymbolicState& st, const ConstructionStep& step) {
  return std::visit(
      overloaded{
          [&](const BubbleStep& s) { return bubble(st, s.target); },
          [&](const RingStep& s) { return ring(st, s.host); },
          [&](const GOpStep& s) { return g_operation(st, s.pair, s.handles); },
          [&](const ConnectBoyStep& s) { return connect_boy(st, s.pair); },
          [&](const ConnectN2Step& s) { return connect_n2(st, s.pair); },
          [&](const SwapColorsStep&) { return swap_colors(st); },
      },
      step);
}

}  // namespace regions
