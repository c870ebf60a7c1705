#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "regions/spectrum.hpp"
#include "regions/trace.hpp"

namespace regions {

// Why a data tuple admits no immersion: the first violated condition of
// the realizability predicate. For equation mismatches both doubled
// weighted sums and chi + N are reported.
struct RejectionReport {
  enum class Kind : std::uint8_t {
    BlackSpectrumEmpty,
    WhiteSpectrumEmpty,
    SurfaceEulerTooLarge,
    NegativeTriplePoints,
    EquationMismatch,
  };

  Kind kind = Kind::EquationMismatch;
  std::string reason;
  std::int64_t doubled_black = 0;
  std::int64_t doubled_white = 0;
  std::int64_t chi_plus_n = 0;
};

class NotRealizableError : public std::runtime_error {
 public:
  explicit NotRealizableError(RejectionReport report)
      : std::runtime_error(report.reason), report_(std::move(report)) {}

  [[nodiscard]] const RejectionReport& report() const { return report_; }

 private:
  RejectionReport report_;
};

/// Synthesize a construction trace whose replay realizes d exactly.
/// Deterministic; the number of steps is bounded by
/// 4 * (N + total black + total white) + 4. Throws NotRealizableError
/// when the data fails the realizability predicate.
ConstructionTrace plan(const ImmersionData& d);

/// plan on realizable data, otherwise the rejection report.
std::variant<ConstructionTrace, RejectionReport> plan_or_explain(const ImmersionData& d);

}  // namespace regions
