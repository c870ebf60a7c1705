#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "regions/trace.hpp"

namespace regions {

// Where and why a replay stopped. step_index -1 designates the base;
// the snapshot is the state at failure (the last valid state for a
// precondition failure, the offending state for an audit failure).
struct ReplayError {
  int step_index = -1;
  FaultKind reason = FaultKind::BaseInvalid;
  std::string message;
  std::optional<SymbolicState> snapshot;
};

class ReplayException : public std::runtime_error {
 public:
  explicit ReplayException(ReplayError error)
      : std::runtime_error(error.message), error_(std::move(error)) {}

  [[nodiscard]] const ReplayError& error() const { return error_; }

 private:
  ReplayError error_;
};

// Called after the base (-1) and after every step with the audited state.
using StepAudit = std::function<void(const SymbolicState& st, int step_index)>;

/// Build the base, apply every step in order, and run the full invariant
/// audit after each one. Returns the final state or throws
/// ReplayException at the first failure. Deterministic, including region
/// id assignment.
SymbolicState replay(const ConstructionTrace& t);
SymbolicState replay(const ConstructionTrace& t, const StepAudit& audit);

struct VerifyOutcome {
  bool ok = false;
  std::optional<ReplayError> replay_error;
  std::optional<ImmersionData> derived;  // set when replay succeeded
};

/// True iff the trace replays cleanly and its final state derives d
/// exactly (spectra, chi and N, color-exact).
bool verify(const ConstructionTrace& t, const ImmersionData& d);

/// verify with diagnostics: the replay error or the derived data.
VerifyOutcome verify_explain(const ConstructionTrace& t, const ImmersionData& d);

}  // namespace regions
