#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "regions/io.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 domain rejection or verification failure,
// 2 usage or parse error. Machine-readable JSON goes to stdout, human
// diagnostics to stderr.

int run_check(const std::string& data_path) {
  const regions::ImmersionData d = regions::load_immersion_data(data_path);
  const std::int64_t doubled_black = 2 * regions::weighted_sum(d.black);
  const std::int64_t doubled_white = 2 * regions::weighted_sum(d.white);
  const std::int64_t chi_plus_n = d.surface_euler + d.triple_points;
  const bool ok = regions::is_realizable(d);

  json out{{"realizable", ok},
           {"doubled_black", doubled_black},
           {"doubled_white", doubled_white},
           {"chi_plus_n", chi_plus_n}};
  std::cout << regions::dump_deterministic(out);
  if (ok) {
    std::cerr << "realizable: " << doubled_black << " = " << doubled_white
              << " = chi+N = " << chi_plus_n << "\n";
  } else {
    std::cerr << "not realizable\n";
  }
  return ok ? 0 : 1;
}

int run_plan(const std::string& data_path, const std::string& out_path) {
  const regions::ImmersionData d = regions::load_immersion_data(data_path);
  const auto result = regions::plan_or_explain(d);
  if (const auto* rejection = std::get_if<regions::RejectionReport>(&result)) {
    std::cout << regions::dump_deterministic(regions::to_json(*rejection));
    std::cerr << "rejected: " << rejection->reason << "\n";
    return 1;
  }
  const auto& trace = std::get<regions::ConstructionTrace>(result);
  regions::save_json(regions::to_json(trace), out_path);
  json out{{"ok", true}, {"out", out_path}, {"steps", trace.steps.size()}};
  std::cout << regions::dump_deterministic(out);
  return 0;
}

int run_verify(const std::string& trace_path, const std::string& data_path) {
  const regions::ConstructionTrace trace = regions::load_trace(trace_path);
  const regions::ImmersionData d = regions::load_immersion_data(data_path);
  const regions::VerifyOutcome outcome = regions::verify_explain(trace, d);

  json out{{"ok", outcome.ok}};
  if (outcome.replay_error.has_value()) {
    out["error"] = regions::to_json(*outcome.replay_error);
    std::cerr << "replay failed at step " << outcome.replay_error->step_index << ": "
              << outcome.replay_error->message << "\n";
  } else if (outcome.derived.has_value()) {
    out["derived"] = regions::to_json(*outcome.derived);
    if (!outcome.ok) {
      std::cerr << "replayed data differs from the given data\n";
    }
  }
  std::cout << regions::dump_deterministic(out);
  return outcome.ok ? 0 : 1;
}

int run_fuzz(std::uint64_t seed, std::int64_t steps, const regions::Bounds& bounds) {
  const regions::FuzzReport report = regions::fuzz_homotopy(seed, steps, bounds);
  std::cout << regions::dump_deterministic(regions::to_json(report));
  if (!report.ok()) {
    std::cerr << report.failures.size() << " failure(s) in " << report.trials << " moves\n";
  }
  return report.ok() ? 0 : 1;
}

int run_enumerate(const regions::Bounds& bounds, bool compare_predicate) {
  const std::vector<regions::ImmersionData> realized = regions::enumerate_realized(bounds);
  json out = json::array();
  for (const auto& d : realized) {
    out.push_back(regions::to_json(d));
  }
  std::cout << regions::dump_deterministic(out);

  if (!compare_predicate) {
    return 0;
  }

  std::vector<regions::ImmersionData> expected;
  for (const auto& d : regions::enumerate_data_box(bounds)) {
    if (regions::is_realizable(d)) {
      expected.push_back(d);
    }
  }
  std::vector<regions::ImmersionData> missing;
  std::set_difference(expected.begin(), expected.end(), realized.begin(), realized.end(),
                      std::back_inserter(missing));
  std::vector<regions::ImmersionData> extra;
  std::set_difference(realized.begin(), realized.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));

  if (missing.empty() && extra.empty()) {
    std::cerr << "enumeration matches the predicate on " << expected.size() << " data\n";
    return 0;
  }
  for (const auto& d : missing) {
    std::cerr << "realizable but not enumerated (raise --max-len?): "
              << regions::to_json(d).dump() << "\n";
  }
  for (const auto& d : extra) {
    std::cerr << "enumerated but not realizable: " << regions::to_json(d).dump() << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realizability, synthesis and verification of complementary-region data "
               "for generic immersions of closed surfaces into S^3"};
  app.require_subcommand(1);

  std::string data_path;
  std::string trace_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::int64_t steps = 1000;
  regions::Bounds bounds;

  auto* check = app.add_subcommand("check", "Decide whether a data file is realizable");
  check->add_option("--data", data_path, "ImmersionData JSON file")->required();

  auto* plan = app.add_subcommand("plan", "Synthesize a construction trace for a data file");
  plan->add_option("--data", data_path, "ImmersionData JSON file")->required();
  plan->add_option("--out", out_path, "output trace file")->required();

  auto* verify = app.add_subcommand("verify", "Replay a trace and compare against a data file");
  verify->add_option("--trace", trace_path, "trace JSON file")->required();
  verify->add_option("--data", data_path, "ImmersionData JSON file")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Random homotopy moves with invariant checks");
  fuzz->add_option("--seed", seed, "PRNG seed (splitmix64)");
  fuzz->add_option("--steps", steps, "number of moves")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--min-chi", bounds.min_chi, "lowest base surface euler characteristic");

  auto* enumerate = app.add_subcommand("enumerate", "Breadth-first image of the construction grammar");
  enumerate->add_option("--max-k", bounds.max_k, "largest spectrum key")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-count", bounds.max_count, "most regions per color")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-n", bounds.max_n, "largest triple point count")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--min-chi", bounds.min_chi, "lowest surface euler characteristic");
  enumerate->add_option("--max-len", bounds.max_trace_len, "longest trace expanded")
      ->check(CLI::NonNegativeNumber);
  bool compare_predicate = false;
  enumerate->add_flag("--compare-predicate", compare_predicate,
                      "fail unless the enumeration equals the realizability predicate "
                      "on the data box");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(data_path);
    if (plan->parsed()) return run_plan(data_path, out_path);
    if (verify->parsed()) return run_verify(trace_path, data_path);
    if (fuzz->parsed()) return run_fuzz(seed, steps, bounds);
    if (enumerate->parsed()) return run_enumerate(bounds, compare_predicate);
  } catch (const regions::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
