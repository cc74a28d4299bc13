#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logres/engine.hpp"

namespace logres {

struct MonoidGeneratorSpec {
  std::string name;
  IVec vector;
  bool operator==(const MonoidGeneratorSpec&) const = default;
};

struct ProblemSpec {
  std::vector<std::string> ordinary;
  int rank = 0;
  std::vector<MonoidGeneratorSpec> generators;
  std::vector<OrbifoldCharacter> orbifold;
  std::vector<std::string> ideal;
  long long mark = 1;
  std::optional<int> codim;
  int max_depth = 64;
  std::string verbosity = "normal";  // quiet | normal | verbose
  bool operator==(const ProblemSpec&) const = default;
};

// JSON problem file. Syntax errors report line and column, validation errors
// the JSON pointer of the offending field; both throw ParseError.
ProblemSpec parse_problem(const std::string& text);
std::string emit_problem(const ProblemSpec& spec);
Chart problem_chart(const ProblemSpec& spec);
std::vector<Polynomial> problem_ideal(const ProblemSpec& spec, const Chart& C);

constexpr int kTraceVersion = 1;

struct TraceDocument {
  int version = kTraceVersion;
  std::string mode;
  nlohmann::ordered_json data;
  bool operator==(const TraceDocument& o) const { return version == o.version && mode == o.mode && data == o.data; }
};

nlohmann::ordered_json chart_json(const Chart& C);
TraceDocument trace_document(const BlowupTree& T);
TraceDocument resolution_document(const Resolution& R);
std::string emit_trace(const TraceDocument& doc);
// Validates the version and the node records; throws ParseError.
TraceDocument parse_trace(const std::string& text);

std::string emit_dot(const BlowupTree& T);

// Machine-readable error record.
std::string error_record(const std::string& kind, const std::string& message, const std::string& chart = "");

}  // namespace logres
