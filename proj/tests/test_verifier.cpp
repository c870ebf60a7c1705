#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "regions/io.hpp"
#include "regions/planner.hpp"
#include "regions/verifier.hpp"
#include "support.hpp"

using regions::ConstructionTrace;
using regions::FaultKind;
using regions::ImmersionData;
using regions::ReplayException;
using regions::SymbolicState;

TEST_CASE("replay builds the base and applies steps in order") {
  ConstructionTrace t;
  t.base = regions::BaseEmbedding{0};
  const SymbolicState sphere = regions::replay(t);
  CHECK(sphere.regions.size() == 2);
  for (const auto& [id, r] : sphere.regions) CHECK(r.euler == 1);

  ConstructionTrace handles;
  handles.base = regions::BaseEmbedding{1};
  handles.steps.push_back(regions::GOpStep{regions::make_region_pair(0, 1), 2});
  const SymbolicState out = regions::replay(handles);
  CHECK(out.at(0).euler == -2);
  CHECK(out.at(1).euler == -2);
  CHECK(out.surface_euler == -4);
}

TEST_CASE("replay reports the first failing step") {
  ConstructionTrace t;
  t.base = regions::BaseEmbedding{0};
  t.steps.push_back(regions::GOpStep{regions::make_region_pair(0, 5), 1});
  try {
    regions::replay(t);
    FAIL("expected a ReplayException");
  } catch (const ReplayException& e) {
    CHECK(e.error().step_index == 0);
    CHECK(e.error().reason == FaultKind::UnknownRegion);
    REQUIRE(e.error().snapshot.has_value());
    CHECK(e.error().snapshot->regions.size() == 2);
  }

  ConstructionTrace bad_base;
  bad_base.base = regions::BaseEmbedding{-3};
  try {
    regions::replay(bad_base);
    FAIL("expected a ReplayException");
  } catch (const ReplayException& e) {
    CHECK(e.error().step_index == -1);
    CHECK(e.error().reason == FaultKind::BaseInvalid);
  }

  ConstructionTrace uncertified;
  uncertified.base = regions::BaseN2{};
  uncertified.steps.push_back(regions::RingStep{0});
  uncertified.steps.push_back(
      regions::ConnectBoyStep{regions::make_region_pair(2, 3)});
  try {
    regions::replay(uncertified);
    FAIL("expected a ReplayException");
  } catch (const ReplayException& e) {
    CHECK(e.error().step_index == 1);
    CHECK(e.error().reason == FaultKind::UncertifiedPair);
  }
}

TEST_CASE("replay audits every intermediate state") {
  const ImmersionData d{{{0, 2}, {2, 1}}, {{0, 2}, {2, 1}}, 0, 2};
  REQUIRE(regions::is_realizable(d));
  const ConstructionTrace t = regions::plan(d);
  int visited = 0;
  int last_index = -2;
  regions::replay(t, [&](const SymbolicState& st, int index) {
    CHECK(regions::check_state(st).empty());
    CHECK(index == last_index + 1);
    last_index = index;
    ++visited;
  });
  CHECK(visited == static_cast<int>(t.steps.size()) + 1);
}

TEST_CASE("verify compares the derived data exactly") {
  const ImmersionData genus2{{{2, 1}}, {{2, 1}}, -2, 0};
  const ConstructionTrace t = regions::plan(genus2);
  CHECK(regions::verify(t, genus2));

  ImmersionData other = genus2;
  other.white.add(0);
  CHECK_FALSE(regions::verify(t, other));

  const ImmersionData boy{{{0, 1}}, {{0, 1}}, 1, 1};
  ConstructionTrace boy_trace;
  boy_trace.base = regions::BaseBoy{};
  boy_trace.claimed = boy;
  CHECK(regions::verify(boy_trace, boy));

  const regions::VerifyOutcome outcome = regions::verify_explain(boy_trace, other);
  CHECK_FALSE(outcome.ok);
  CHECK_FALSE(outcome.replay_error.has_value());
  REQUIRE(outcome.derived.has_value());
  CHECK(*outcome.derived == boy);
}

TEST_CASE("verify is color-exact across SwapColors") {
  const ImmersionData d{{{3, 1}}, {{2, 2}}, -4, 0};
  const ConstructionTrace t = regions::plan(d);
  CHECK(regions::verify(t, d));
  const ImmersionData mirrored{d.white, d.black, d.surface_euler, d.triple_points};
  CHECK_FALSE(regions::verify(t, mirrored));
}

TEST_CASE("replay is deterministic including id assignment") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ConstructionTrace t = regions::random_trace(seed, regions::Bounds{});
    const SymbolicState a = regions::replay(t);
    const SymbolicState b = regions::replay(t);
    CHECK(a == b);
    CHECK(regions::dump_deterministic(regions::to_json(a)) ==
          regions::dump_deterministic(regions::to_json(b)));
  }
}

TEST_CASE("trace serialization round-trips") {
  regions::SplitMix64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const ImmersionData d = testsupport::random_realizable(rng);
    const ConstructionTrace t = regions::plan(d);
    const ConstructionTrace back = regions::trace_from_json(regions::to_json(t), "test");
    CHECK(back == t);
    CHECK(regions::verify(back, d));
  }
}

TEST_CASE("trace parsing rejects malformed documents") {
  using nlohmann::json;
  const json good = regions::to_json(regions::plan({{{0, 2}}, {{0, 2}}, 2, 2}));

  json bad = good;
  bad["base"]["kind"] = "klein";
  CHECK_THROWS_AS(regions::trace_from_json(bad, "doc"), regions::ParseError);

  bad = good;
  bad["steps"].push_back(json{{"op", "gop"}, {"pair", {0, 1}}, {"g", -1}});
  CHECK_THROWS_AS(regions::trace_from_json(bad, "doc"), regions::ParseError);

  bad = good;
  bad["steps"].push_back(json{{"op", "ring"}});
  CHECK_THROWS_AS(regions::trace_from_json(bad, "doc"), regions::ParseError);

  bad = good;
  bad["steps"].push_back(json{{"op", "gop"}, {"pair", {3, 3}}, {"g", 1}});
  CHECK_THROWS_AS(regions::trace_from_json(bad, "doc"), regions::ParseError);

  bad = good;
  bad.erase("claimed");
  CHECK_THROWS_AS(regions::trace_from_json(bad, "doc"), regions::ParseError);
}
