// Acceptance suite. Each criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "regions/io.hpp"
#include "regions/oracle.hpp"
#include "regions/planner.hpp"
#include "regions/verifier.hpp"

namespace {

using regions::Bounds;
using regions::ConstructionTrace;
using regions::ImmersionData;
using regions::RegionSpectrum;
using regions::SymbolicState;

// Cross-check kept independent of the per-color equation: the euler
// characteristic of the immersed image must equal chi(F) + N on every
// state the suite touches.
struct ImageEulerAudit {
  std::int64_t states = 0;
  std::int64_t failures = 0;

  void check(const SymbolicState& st) {
    ++states;
    const ImmersionData d = regions::derive_data(st);
    if (regions::weighted_sum(d.black) + regions::weighted_sum(d.white) !=
        st.surface_euler + st.triple_points) {
      ++failures;
    }
  }
};

ImageEulerAudit g_audit;

regions::StepAudit audit_hook() {
  return [](const SymbolicState& st, int) { g_audit.check(st); };
}

bool criterion1(std::string& detail) {
  std::vector<ImmersionData> table;
  table.push_back({{{0, 1}}, {{0, 1}}, 2, 0});  // sphere
  table.push_back({{{1, 1}}, {{1, 1}}, 0, 0});  // torus
  for (std::int64_t p = 2; p <= 5; ++p) {       // genus-p embeddings
    table.push_back({{{p, 1}}, {{p, 1}}, 2 - 2 * p, 0});
  }
  table.push_back({{{0, 1}}, {{0, 1}}, 1, 1});  // Boy
  for (std::int64_t n = 1; n <= 6; ++n) {       // Boy chains
    table.push_back({{{0, 1}}, {{0, 1}}, 2 - n, n});
  }
  table.push_back({{{0, 2}}, {{0, 2}}, 2, 2});  // two triple points
  for (std::int64_t n = 4; n <= 8; n += 2) {    // even chains
    table.push_back({{{0, 1 + n / 2}}, {{0, 1 + n / 2}}, 2, n});
  }

  std::int64_t ok = 0;
  for (const ImmersionData& d : table) {
    const auto result = regions::plan_or_explain(d);
    const auto* trace = std::get_if<ConstructionTrace>(&result);
    if (trace == nullptr) continue;
    try {
      const SymbolicState final_state = regions::replay(*trace, audit_hook());
      if (regions::derive_data(final_state) == d) ++ok;
    } catch (const regions::ReplayException&) {
    }
  }
  std::ostringstream msg;
  msg << ok << "/" << table.size() << " canonical data realized exactly";
  detail = msg.str();
  return ok == static_cast<std::int64_t>(table.size());
}

bool criterion2(std::string& detail) {
  // Every census with keys <= 3 and per-key counts <= 3, crossed with
  // 0 <= N <= 4 and -8 <= chi <= 2.
  std::vector<RegionSpectrum> spectra;
  for (std::int64_t a0 = 0; a0 <= 3; ++a0) {
    for (std::int64_t a1 = 0; a1 <= 3; ++a1) {
      for (std::int64_t a2 = 0; a2 <= 3; ++a2) {
        for (std::int64_t a3 = 0; a3 <= 3; ++a3) {
          RegionSpectrum s;
          if (a0 > 0) s.add(0, a0);
          if (a1 > 0) s.add(1, a1);
          if (a2 > 0) s.add(2, a2);
          if (a3 > 0) s.add(3, a3);
          spectra.push_back(std::move(s));
        }
      }
    }
  }

  std::int64_t checked = 0;
  std::int64_t planned = 0;
  std::int64_t mismatches = 0;
  for (const RegionSpectrum& black : spectra) {
    for (const RegionSpectrum& white : spectra) {
      for (std::int64_t n = 0; n <= 4; ++n) {
        for (std::int64_t chi = -8; chi <= 2; ++chi) {
          const ImmersionData d{black, white, chi, n};
          ++checked;
          const bool realizable = regions::is_realizable(d);
          const auto result = regions::plan_or_explain(d);
          const auto* trace = std::get_if<ConstructionTrace>(&result);
          if ((trace != nullptr) != realizable) {
            ++mismatches;
            continue;
          }
          if (trace == nullptr) continue;
          ++planned;
          try {
            const SymbolicState final_state = regions::replay(*trace, audit_hook());
            if (regions::derive_data(final_state) != d) ++mismatches;
          } catch (const regions::ReplayException&) {
            ++mismatches;
          }
        }
      }
    }
  }
  std::ostringstream msg;
  msg << checked << " data checked, " << planned << " planned and verified, " << mismatches
      << " mismatches";
  detail = msg.str();
  return mismatches == 0;
}

bool criterion3(std::string& detail) {
  Bounds bounds;
  bounds.max_k = 3;
  bounds.min_chi = -8;
  bounds.max_trace_len = 25;
  std::int64_t failures = 0;
  for (std::uint64_t seed = 0; seed < 100000; ++seed) {
    try {
      const ConstructionTrace t = regions::random_trace(seed, bounds);
      const SymbolicState final_state = regions::replay(t, audit_hook());
      if (regions::derive_data(final_state) != t.claimed ||
          !regions::is_realizable(t.claimed)) {
        ++failures;
      }
    } catch (const std::exception&) {
      ++failures;
    }
  }
  std::ostringstream msg;
  msg << "100000 random traces replayed with per-step audits, " << failures << " failures";
  detail = msg.str();
  return failures == 0;
}

bool criterion4(std::string& detail) {
  Bounds bounds;
  std::int64_t moves = 0;
  std::int64_t failures = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const regions::FuzzReport report = regions::fuzz_homotopy(
        seed, 100, bounds, [](const SymbolicState& st) { g_audit.check(st); });
    moves += report.trials;
    failures += static_cast<std::int64_t>(report.failures.size());
  }
  std::ostringstream msg;
  msg << moves << " moves across 1000 runs, " << failures << " invariant failures";
  detail = msg.str();
  return moves == 100000 && failures == 0;
}

bool criterion5(std::string& detail) {
  std::ostringstream msg;
  msg << g_audit.states << " states cross-checked, " << g_audit.failures << " failures";
  detail = msg.str();
  return g_audit.states > 0 && g_audit.failures == 0;
}

bool criterion6(std::string& detail) {
  const std::vector<ImmersionData> inputs = {
      {{{0, 5}}, {{0, 5}}, 2, 8},
      {{{3, 1}}, {{2, 2}}, -4, 0},
      {{{0, 2}, {2, 1}}, {{0, 2}, {2, 1}}, 0, 2},
  };
  for (const ImmersionData& d : inputs) {
    const ConstructionTrace a = regions::plan(d);
    const ConstructionTrace b = regions::plan(d);
    if (regions::dump_deterministic(regions::to_json(a)) !=
        regions::dump_deterministic(regions::to_json(b))) {
      detail = "plan output differs between runs";
      return false;
    }
    if (regions::dump_deterministic(regions::to_json(regions::replay(a))) !=
        regions::dump_deterministic(regions::to_json(regions::replay(b)))) {
      detail = "replayed state differs between runs";
      return false;
    }
  }

  Bounds bounds;
  bounds.max_trace_len = 12;
  for (std::uint64_t seed : {0ULL, 12345ULL, 999ULL}) {
    if (regions::dump_deterministic(regions::to_json(regions::random_trace(seed, bounds))) !=
        regions::dump_deterministic(regions::to_json(regions::random_trace(seed, bounds)))) {
      detail = "random_trace output differs between runs";
      return false;
    }
  }

  Bounds small;
  small.max_k = 2;
  small.max_count = 2;
  small.max_n = 2;
  small.min_chi = -4;
  small.max_trace_len = 3;
  const auto enum_once = regions::enumerate_realized(small);
  const auto enum_twice = regions::enumerate_realized(small);
  nlohmann::json ja = nlohmann::json::array();
  nlohmann::json jb = nlohmann::json::array();
  for (const auto& d : enum_once) ja.push_back(regions::to_json(d));
  for (const auto& d : enum_twice) jb.push_back(regions::to_json(d));
  if (regions::dump_deterministic(ja) != regions::dump_deterministic(jb)) {
    detail = "enumerate output differs between runs";
    return false;
  }

  detail = "plan, replay, random_trace and enumerate are byte-identical across runs";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, "canonical example table", criterion1},
      {2, "two-sided realizability sweep (k<=3, counts<=3, N<=4, chi in [-8,2])", criterion2},
      {3, "random construction trace audit (100000 traces, length <= 25)", criterion3},
      {4, "homotopy move invariance (100000 moves across 1000 runs)", criterion4},
      {5, "image euler characteristic cross-check on every audited state", criterion5},
      {6, "byte determinism of plan, replay, random_trace, enumerate", criterion6},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << ": "
              << detail << " (" << elapsed << " ms)\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
