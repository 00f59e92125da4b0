#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "uglov/crystal.hpp"
#include "uglov/symbol.hpp"

namespace uglov {

// Where a relabelling should land: an exact charge, or one of the two
// asymptotic (Kleshchev) labellings for a residue pair (v0, v1) in [0, e)^2.
struct ChargeTarget {
  enum class Kind { exact, asymptotic_plus, asymptotic_minus };

  static ChargeTarget exact(Charge c) { return {Kind::exact, c}; }
  static ChargeTarget asymptotic_plus(int v0, int v1) {
    return {Kind::asymptotic_plus, Charge{v0, v1}};
  }
  static ChargeTarget asymptotic_minus(int v0, int v1) {
    return {Kind::asymptotic_minus, Charge{v0, v1}};
  }

  Kind kind;
  Charge charge;

  friend bool operator==(const ChargeTarget&, const ChargeTarget&) = default;
};

// Atomic plan steps and their charge actions:
//   shift t    (s0, s1) -> (s0+te, s1+te)   identity on bipartitions
//   swap       (s0, s1) -> (s1, s0+e)       swaps the components
//   raise      (s0, s1) -> (s0, s1+e)       pair_swap at (s0, s1)
//   lower      (s0, s1) -> (s0, s1-e)       pair_swap_inverse at (s0, s1-e)
//   stabilize  no-op marker: the asymptotic threshold has been crossed
struct RelabelStep {
  enum class Op { shift, swap, raise, lower, stabilize };
  Op op;
  int t = 0; // shift amount; unused otherwise

  friend bool operator==(const RelabelStep&, const RelabelStep&) = default;
};

struct RelabelPlan {
  int e = 2;
  Charge source;
  ChargeTarget target;
  std::vector<RelabelStep> steps;
};

// Deterministic plan between congruence-compatible labellings.  Asymptotic
// targets need the rank n to know where the threshold sits; exact ones don't.
RelabelPlan make_plan(int e, Charge source, ChargeTarget target,
                      std::optional<int> n = std::nullopt);

// Replay a plan's charges without touching bipartitions; throws if any raise
// or lower step is applied outside its validity window.  Returns the final
// charge.  Used by tests; relabel() calls it implicitly step by step.
Charge replay_plan_charges(const RelabelPlan& plan);

// Execute: membership under the source labelling is checked first.
Bipartition relabel(const Bipartition& bp, int e, Charge source, ChargeTarget target);

// Independent oracle: strip good nodes down to the empty bipartition under
// `from`, replay the reversed residue word under `to`.  Any strip order gives
// the same answer; both extremes are exposed for the path-independence tests.
enum class StripOrder { smallest_residue_first, largest_residue_first };
Bipartition relabel_recursive(const Bipartition& bp, Modulus e, const NodeOrder& from,
                              const NodeOrder& to,
                              StripOrder strip = StripOrder::smallest_residue_first);

// Does good-node stripping from bp reach the empty bipartition?
bool is_uglov_member(const Bipartition& bp, Modulus e, const NodeOrder& order);

nlohmann::json to_json(const RelabelPlan& plan);

} // namespace uglov
