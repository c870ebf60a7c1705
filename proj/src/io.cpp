#include "regions/io.hpp"

#include <fstream>
#include <limits>

namespace regions {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw ParseError(context + ": " + what);
}

std::int64_t require_int(const json& j, const std::string& field, const std::string& context) {
  if (!j.contains(field)) fail(context, "missing field \"" + field + "\"");
  const json& v = j.at(field);
  if (!v.is_number_integer()) fail(context, "field \"" + field + "\" must be an integer");
  return v.get<std::int64_t>();
}

RegionId require_region_id(const json& v, const std::string& field, const std::string& context) {
  if (!v.is_number_integer()) fail(context, "field \"" + field + "\" must be an integer region id");
  const std::int64_t id = v.get<std::int64_t>();
  if (id < std::numeric_limits<RegionId>::min() || id > std::numeric_limits<RegionId>::max()) {
    fail(context, "field \"" + field + "\" is out of region id range");
  }
  return static_cast<RegionId>(id);
}

bool canonical_decimal(const std::string& s) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
  if (s.size() > 18) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

json spectrum_to_json(const RegionSpectrum& s) {
  json out = json::object();
  for (const auto& [k, n] : s.counts()) {
    out[std::to_string(k)] = n;
  }
  return out;
}

RegionSpectrum spectrum_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) fail(context, "spectrum must be an object of key/count pairs");
  RegionSpectrum out;
  for (const auto& [key, value] : j.items()) {
    if (!canonical_decimal(key)) {
      fail(context, "spectrum key \"" + key + "\" is not a canonical non-negative decimal");
    }
    if (!value.is_number_integer()) {
      fail(context, "count under key \"" + key + "\" must be an integer");
    }
    const std::int64_t n = value.get<std::int64_t>();
    if (n <= 0) {
      fail(context, "count under key \"" + key + "\" must be positive; omit zero counts");
    }
    out.add(std::stoll(key), n);
  }
  return out;
}

RegionPair pair_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.size() != 2) fail(context, "field \"pair\" must be a two-element array");
  const RegionId a = require_region_id(j[0], "pair[0]", context);
  const RegionId b = require_region_id(j[1], "pair[1]", context);
  if (a == b) fail(context, "field \"pair\" must name two distinct regions");
  return make_region_pair(a, b);
}

json pair_to_json(const RegionPair& p) { return json::array({p.lo, p.hi}); }

}  // namespace

json to_json(const ImmersionData& d) {
  return json{{"black", spectrum_to_json(d.black)},
              {"white", spectrum_to_json(d.white)},
              {"chi", d.surface_euler},
              {"n", d.triple_points}};
}

ImmersionData immersion_data_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) fail(context, "data document must be a JSON object");
  for (const std::string field : {"black", "white", "chi", "n"}) {
    if (!j.contains(field)) fail(context, "missing field \"" + field + "\"");
  }
  ImmersionData d;
  d.black = spectrum_from_json(j.at("black"), context + ": black");
  d.white = spectrum_from_json(j.at("white"), context + ": white");
  d.surface_euler = require_int(j, "chi", context);
  d.triple_points = require_int(j, "n", context);
  return d;
}

json to_json(const ConstructionTrace& t) {
  json base = std::visit(
      overloaded{
          [](const BaseEmbedding& b) {
            return json{{"kind", "embedding"}, {"genus", b.genus}};
          },
          [](const BaseBoy&) { return json{{"kind", "boy"}}; },
          [](const BaseN2&) { return json{{"kind", "n2"}}; },
      },
      t.base);

  json steps = json::array();
  for (const ConstructionStep& step : t.steps) {
    steps.push_back(std::visit(
        overloaded{
            [](const BubbleStep& s) {
              return json{{"op", "bubble"}, {"target", s.target}};
            },
            [](const RingStep& s) {
              return json{{"op", "ring"}, {"host", s.host}};
            },
            [](const GOpStep& s) {
              return json{{"op", "gop"}, {"pair", pair_to_json(s.pair)}, {"g", s.handles}};
            },
            [](const ConnectBoyStep& s) {
              return json{{"op", "connect_boy"}, {"pair", pair_to_json(s.pair)}};
            },
            [](const ConnectN2Step& s) {
              return json{{"op", "connect_n2"}, {"pair", pair_to_json(s.pair)}};
            },
            [](const SwapColorsStep&) { return json{{"op", "swap_colors"}}; },
        },
        step));
  }

  return json{{"base", base}, {"steps", steps}, {"claimed", to_json(t.claimed)}};
}

ConstructionTrace trace_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) fail(context, "trace document must be a JSON object");
  for (const std::string field : {"base", "steps", "claimed"}) {
    if (!j.contains(field)) fail(context, "missing field \"" + field + "\"");
  }

  ConstructionTrace t;
  const json& base = j.at("base");
  if (!base.is_object() || !base.contains("kind") || !base.at("kind").is_string()) {
    fail(context, "field \"base\" must be an object with a string \"kind\"");
  }
  const std::string kind = base.at("kind").get<std::string>();
  if (kind == "embedding") {
    const std::int64_t genus = require_int(base, "genus", context + ": base");
    if (genus < 0) fail(context, "base field \"genus\" must be >= 0");
    t.base = BaseEmbedding{genus};
  } else if (kind == "boy") {
    t.base = BaseBoy{};
  } else if (kind == "n2") {
    t.base = BaseN2{};
  } else {
    fail(context, "unknown base kind \"" + kind + "\"");
  }

  const json& steps = j.at("steps");
  if (!steps.is_array()) fail(context, "field \"steps\" must be an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string step_ctx = context + ": steps[" + std::to_string(i) + "]";
    const json& s = steps[i];
    if (!s.is_object() || !s.contains("op") || !s.at("op").is_string()) {
      fail(step_ctx, "step must be an object with a string \"op\"");
    }
    const std::string op = s.at("op").get<std::string>();
    if (op == "bubble") {
      if (!s.contains("target")) fail(step_ctx, "missing field \"target\"");
      t.steps.push_back(BubbleStep{require_region_id(s.at("target"), "target", step_ctx)});
    } else if (op == "ring") {
      if (!s.contains("host")) fail(step_ctx, "missing field \"host\"");
      t.steps.push_back(RingStep{require_region_id(s.at("host"), "host", step_ctx)});
    } else if (op == "gop") {
      if (!s.contains("pair")) fail(step_ctx, "missing field \"pair\"");
      const std::int64_t g = require_int(s, "g", step_ctx);
      if (g < 0) fail(step_ctx, "field \"g\" must be >= 0");
      t.steps.push_back(GOpStep{pair_from_json(s.at("pair"), step_ctx), g});
    } else if (op == "connect_boy") {
      if (!s.contains("pair")) fail(step_ctx, "missing field \"pair\"");
      t.steps.push_back(ConnectBoyStep{pair_from_json(s.at("pair"), step_ctx)});
    } else if (op == "connect_n2") {
      if (!s.contains("pair")) fail(step_ctx, "missing field \"pair\"");
      t.steps.push_back(ConnectN2Step{pair_from_json(s.at("pair"), step_ctx)});
    } else if (op == "swap_colors") {
      t.steps.push_back(SwapColorsStep{});
    } else {
      fail(step_ctx, "unknown op \"" + op + "\"");
    }
  }

  t.claimed = immersion_data_from_json(j.at("claimed"), context + ": claimed");
  return t;
}

json to_json(const SymbolicState& st) {
  json regions_json = json::array();
  for (const auto& [id, r] : st.regions) {
    regions_json.push_back(json{{"id", id}, {"color", to_string(r.color)}, {"euler", r.euler}});
  }
  json pairs = json::array();
  for (const RegionPair& p : st.certified_pairs) {
    pairs.push_back(pair_to_json(p));
  }
  return json{{"regions", regions_json}, {"chi", st.surface_euler},
              {"n", st.triple_points},  {"certified_pairs", pairs},
              {"orientable", st.orientable}, {"next_id", st.next_id}};
}

json to_json(const MoveEvent& ev) {
  return json{{"kind", to_string(ev.kind)}, {"args", ev.args}};
}

json to_json(const FuzzReport& report) {
  json counts = json::object();
  for (const auto& [kind, n] : report.per_move_counts) {
    counts[to_string(kind)] = n;
  }
  json failures = json::array();
  for (const FuzzFailure& f : report.failures) {
    failures.push_back(json{{"seed", f.seed},
                            {"move_index", f.move_index},
                            {"move", to_json(f.move)},
                            {"message", f.message}});
  }
  return json{{"trials", report.trials}, {"failures", failures}, {"per_move_counts", counts}};
}

json to_json(const RejectionReport& report) {
  return json{{"rejected", true},
              {"reason", report.reason},
              {"doubled_black", report.doubled_black},
              {"doubled_white", report.doubled_white},
              {"chi_plus_n", report.chi_plus_n}};
}

json to_json(const ReplayError& error) {
  json out{{"step", error.step_index},
           {"reason", to_string(error.reason)},
           {"message", error.message}};
  if (error.snapshot.has_value()) {
    out["state"] = to_json(*error.snapshot);
  }
  return out;
}

namespace {

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

}  // namespace

ImmersionData load_immersion_data(const std::string& path) {
  return immersion_data_from_json(load_document(path), path);
}

ConstructionTrace load_trace(const std::string& path) {
  return trace_from_json(load_document(path), path);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError(path + ": cannot open file for writing");
  }
  out << dump_deterministic(j);
}

std::string dump_deterministic(const json& j) { return j.dump(2) + "\n"; }

}  // namespace regions
