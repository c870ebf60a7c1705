#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "regions/oracle.hpp"
#include "regions/planner.hpp"

namespace regions {

// Malformed input file or document. The message names the file (or other
// context) and the offending field.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

// Data files: {"black": {"k": count, ...}, "white": {...}, "chi": int,
// "n": int}. Spectrum keys are decimal strings; zero counts are omitted.
nlohmann::json to_json(const ImmersionData& d);
ImmersionData immersion_data_from_json(const nlohmann::json& j, const std::string& context);

// Trace files: {"base": {"kind": "embedding"|"boy"|"n2", ...},
// "steps": [{"op": ..., ...}], "claimed": <data>}. Region ids are the
// integers assigned in replay order.
nlohmann::json to_json(const ConstructionTrace& t);
ConstructionTrace trace_from_json(const nlohmann::json& j, const std::string& context);

nlohmann::json to_json(const SymbolicState& st);
nlohmann::json to_json(const MoveEvent& ev);
nlohmann::json to_json(const FuzzReport& report);
nlohmann::json to_json(const RejectionReport& report);
nlohmann::json to_json(const ReplayError& error);

ImmersionData load_immersion_data(const std::string& path);
ConstructionTrace load_trace(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

/// Canonical text form used everywhere output must be byte-stable:
/// two-space indent, keys in sorted order, trailing newline.
std::string dump_deterministic(const nlohmann::json& j);

}  // namespace regions
