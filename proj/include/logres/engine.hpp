#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "logres/blowup.hpp"

namespace logres {

struct InvariantEntry {
  bool infinite = false;
  Rational value;
  bool operator==(const InvariantEntry& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  bool operator!=(const InvariantEntry& o) const { return !(*this == o); }
};

using Invariant = std::vector<InvariantEntry>;

// Lexicographic, with a proper prefix smaller than its extensions.
int compare_invariants(const Invariant& a, const Invariant& b);
std::string invariant_to_string(const Invariant& inv);

enum class NodeStatus { Active, LeafPrincipal, LeafReduced, LeafEmpty, Error };
std::string status_name(NodeStatus s);

constexpr int kNoK0 = std::numeric_limits<int>::max();

// Outcome of running the invariant recursion on one chart.
struct Plan {
  enum class Kind { Leaf, Kummer, Divisorial };
  Kind kind = Kind::Leaf;
  NodeStatus leaf_status = NodeStatus::LeafPrincipal;
  Invariant entries;
  std::string action;  // initial-cleaning, final-cleaning, base-case, divisorial
  int level = 0;
  KummerCenter center;
  std::vector<int> chain;
  Polynomial divisor;                    // divisorial steps
  std::vector<Polynomial> substitution;  // ambient coordinate change, images of the variables
  bool unbalanced = false;               // balanced-mode only: level where M(I) is not principal
};

// k0 = kNoK0 never cleans initially and reports the first unbalanced level.
Plan plan_chart(const Chart& C, const std::vector<Polynomial>& I, long long a, int k0);

struct EngineConfig {
  int max_depth = 64;
  bool track_strict = false;
  std::vector<Polynomial> strict_root;  // ideal of Z on the root chart
};

struct StepRecord {
  std::string kind;    // kummer | divisorial
  std::string action;  // as in Plan
  int level = 0;
  KummerCenter center;
  std::string center_text;
  std::vector<QVec> center_generators;
  Polynomial divisor;
  std::vector<std::string> substitution;  // "x -> x + u^2" entries, empty if identity
  std::vector<Polynomial> images;         // the same substitution as polynomials
  std::vector<std::string> children;
};

struct TraceNode {
  std::string id;
  std::string parent;
  int depth = 0;
  Chart chart;
  std::vector<Polynomial> transform;
  long long mark = 1;
  Polynomial accumulated;
  std::vector<Polynomial> root_images;
  Invariant invariant;
  int k0 = 0;
  NodeStatus status = NodeStatus::Active;
  // incoming edge
  std::string generator_label;
  Polynomial exceptional;
  // outgoing step
  std::optional<StepRecord> step;
  bool has_strict = false;
  std::vector<Polynomial> strict;
};

struct BlowupTree {
  std::string mode;  // principalize | order-reduce
  Chart root_chart;
  std::vector<Polynomial> root_ideal;
  long long mark = 1;
  std::vector<TraceNode> nodes;  // preorder

  const TraceNode* find(const std::string& id) const;
  std::vector<const TraceNode*> leaves() const;
  int steps() const;
};

BlowupTree order_reduce(const Chart& C, const std::vector<Polynomial>& I, long long a,
                        const EngineConfig& config = {});
BlowupTree principalize(const Chart& C, const std::vector<Polynomial>& I, const EngineConfig& config = {});
Invariant invariant(const Chart& C, const std::vector<Polynomial>& I, long long a, int k0);

// Pullback of the root ideal equals accumulated factor times transform on every
// leaf, and principal leaves carry the unit ideal. Returns a message per failure.
std::vector<std::string> check_final_state(const BlowupTree& T);

struct ZChart {
  std::string node;
  Chart chart;
  std::vector<Polynomial> strict;
  bool log_smooth = false;
  std::optional<Chart> restricted;  // when Z is cut out by ordinary coordinates
};

struct Resolution {
  // Number of distinct step invariants above (1,...,1,inf): the global step at which
  // the generic points of Z are blown up.
  int stage = 0;
  Invariant invariant;
  BlowupTree tree;
  std::vector<ZChart> charts;
};

// Throws NotSynchronized when some path blows up Z's strict transform under
// another invariant or never blows it up.
Resolution resolve_embedded(const Chart& C, const std::vector<Polynomial>& IZ, int codim,
                            const EngineConfig& config = {});

}  // namespace logres
