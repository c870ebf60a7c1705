#include "regions/verifier.hpp"

namespace regions {

namespace {

SymbolicState replay_impl(const ConstructionTrace& t, const StepAudit* audit) {
  SymbolicState st;
  try {
    st = build_base(t.base);
  } catch (const StateError& e) {
    throw ReplayException({-1, e.kind(), e.what(), std::nullopt});
  }

  auto audit_state = [&](int index) {
    const std::vector<Fault> faults = check_state(st);
    if (!faults.empty()) {
      throw ReplayException({index, faults.front().kind, faults.front().message, st});
    }
    if (audit != nullptr && *audit) {
      (*audit)(st, index);
    }
  };

  audit_state(-1);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    try {
      st = apply_step(st, t.steps[i]);
    } catch (const StateError& e) {
      throw ReplayException({static_cast<int>(i), e.kind(), e.what(), st});
    }
    audit_state(static_cast<int>(i));
  }
  return st;
}

}  // namespace

SymbolicState replay(const ConstructionTrace& t) { return replay_impl(t, nullptr); }

SymbolicState replay(const ConstructionTrace& t, const StepAudit& audit) {
  return replay_impl(t, &audit);
}

VerifyOutcome verify_explain(const ConstructionTrace& t, const ImmersionData& d) {
  VerifyOutcome out;
  SymbolicState final_state;
  try {
    final_state = replay(t);
  } catch (const ReplayException& e) {
    out.ok = false;
    out.replay_error = e.error();
    return out;
  }
  out.derived = derive_data(final_state);
  out.ok = (*out.derived == d);
  return out;
}

bool verify(const ConstructionTrace& t, const ImmersionData& d) {
  return verify_explain(t, d).ok;
}

}  // namespace regions
