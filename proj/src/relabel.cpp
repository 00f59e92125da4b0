#include "uglov/relabel.hpp"

#include <algorithm>
#include <set>

#include "uglov/error.hpp"

namespace uglov {

namespace {

int floor_div(int a, int b) { // b > 0
  int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

std::pair<int, int> residue_pair(int e, Charge c) {
  auto red = [&](int v) { return ((v % e) + e) % e; };
  return {red(c.s0), red(c.s1)};
}

bool congruent(int e, Charge a, Charge b) {
  auto [a0, a1] = residue_pair(e, a);
  auto [b0, b1] = residue_pair(e, b);
  return (a0 == b0 && a1 == b1) || (a0 == b1 && a1 == b0);
}

struct Builder {
  int e;
  Charge cur;
  std::vector<RelabelStep> steps;

  void shift(int t) {
    if (t == 0) return;
    steps.push_back({RelabelStep::Op::shift, t});
    cur = cur.shifted(t, e);
  }
  void swap() {
    steps.push_back({RelabelStep::Op::swap, 0});
    cur = Charge{cur.s1, cur.s0 + e};
  }
  void raise() {
    if (!(0 <= cur.s0 && cur.s0 <= cur.s1)) throw error("plan: raise outside validity");
    steps.push_back({RelabelStep::Op::raise, 0});
    cur.s1 += e;
  }
  void lower() {
    if (!(0 <= cur.s0 && cur.s0 <= cur.s1 - e)) throw error("plan: lower outside validity");
    steps.push_back({RelabelStep::Op::lower, 0});
    cur.s1 -= e;
  }
  void stabilize() { steps.push_back({RelabelStep::Op::stabilize, 0}); }

  // Normalize to the unique window charge (u0, u1), 0 <= u0 <= u1 < e.
  void to_window() {
    shift(-floor_div(cur.s0, e)); // s0 into [0, e)
    if (cur.s1 < cur.s0) {
      swap();
      shift(-floor_div(cur.s0, e));
    }
    while (cur.s1 - e >= cur.s0) lower();
    if (cur.s1 >= e) { // s0 <= s1 < s0+e but s1 over the window roof
      swap();
      shift(-1);
    }
  }
};

std::vector<RelabelStep> invert(const std::vector<RelabelStep>& steps) {
  std::vector<RelabelStep> out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (it->op) {
      case RelabelStep::Op::shift: out.push_back({RelabelStep::Op::shift, -it->t}); break;
      case RelabelStep::Op::raise: out.push_back({RelabelStep::Op::lower, 0}); break;
      case RelabelStep::Op::lower: out.push_back({RelabelStep::Op::raise, 0}); break;
      case RelabelStep::Op::swap:
        // swap^{-1} = shift(-1) after swap
        out.push_back({RelabelStep::Op::swap, 0});
        out.push_back({RelabelStep::Op::shift, -1});
        break;
      case RelabelStep::Op::stabilize: break; // identity marker, drop on inversion
    }
  }
  return out;
}

// Local rewrites until fixpoint: merge shifts, drop zero shifts, cancel
// raise/lower neighbours, move shifts left past swaps, fuse swap.swap into
// shift(1).  All rewrites preserve the charge trajectory endpoints and the
// bipartition map.
void simplify(std::vector<RelabelStep>& steps) {
  using Op = RelabelStep::Op;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<RelabelStep> out;
    std::size_t i = 0;
    while (i < steps.size()) {
      if (steps[i].op == Op::shift && steps[i].t == 0) {
        ++i;
        changed = true;
        continue;
      }
      if (i + 1 < steps.size()) {
        const RelabelStep &a = steps[i], &b = steps[i + 1];
        if (a.op == Op::shift && b.op == Op::shift) {
          out.push_back({Op::shift, a.t + b.t});
          i += 2;
          changed = true;
          continue;
        }
        if (a.op == Op::swap && b.op == Op::swap) {
          out.push_back({Op::shift, 1});
          i += 2;
          changed = true;
          continue;
        }
        if ((a.op == Op::raise && b.op == Op::lower) ||
            (a.op == Op::lower && b.op == Op::raise)) {
          i += 2;
          changed = true;
          continue;
        }
        if (a.op == Op::swap && b.op == Op::shift) {
          out.push_back(b);
          out.push_back(a);
          i += 2;
          changed = true;
          continue;
        }
      }
      out.push_back(steps[i]);
      ++i;
    }
    steps = std::move(out);
  }
}

Charge step_charge(int e, Charge c, const RelabelStep& s, bool check) {
  switch (s.op) {
    case RelabelStep::Op::shift: return c.shifted(s.t, e);
    case RelabelStep::Op::swap: return Charge{c.s1, c.s0 + e};
    case RelabelStep::Op::raise:
      if (check && !(0 <= c.s0 && c.s0 <= c.s1)) throw error("plan replay: invalid raise");
      return Charge{c.s0, c.s1 + e};
    case RelabelStep::Op::lower:
      if (check && !(0 <= c.s0 && c.s0 <= c.s1 - e)) throw error("plan replay: invalid lower");
      return Charge{c.s0, c.s1 - e};
    case RelabelStep::Op::stabilize: return c;
  }
  throw std::logic_error("unknown step");
}

} // namespace

RelabelPlan make_plan(int e, Charge source, ChargeTarget target, std::optional<int> n) {
  if (e < 2) throw std::invalid_argument("plans need a finite modulus >= 2");
  RelabelPlan plan{e, source, target, {}};

  Builder src{e, source, {}};
  src.to_window();
  Charge w = src.cur;

  if (target.kind == ChargeTarget::Kind::exact) {
    if (!congruent(e, source, target.charge))
      throw error("incompatible charges: residue multisets differ");
    Builder dst{e, target.charge, {}};
    dst.to_window();
    if (dst.cur != w) throw error("incompatible charges: windows differ"); // unreachable
    plan.steps = src.steps;
    auto back = invert(dst.steps);
    plan.steps.insert(plan.steps.end(), back.begin(), back.end());
  } else {
    if (!n) throw std::invalid_argument("asymptotic targets need the rank n");
    Charge v = target.charge;
    if (v.s0 < 0 || v.s0 >= e || v.s1 < 0 || v.s1 >= e)
      throw std::invalid_argument("asymptotic target pair must lie in [0, e)");
    if (!congruent(e, source, v))
      throw error("incompatible charges: residue multisets differ");
    Builder b = src;
    bool plus = target.kind == ChargeTarget::Kind::asymptotic_plus;
    // Ladder in the orientation whose classes are (v0, v1) for the minus
    // target, (v1, v0) for the plus target (a final swap then crosses over).
    Charge want = plus ? Charge{v.s1, v.s0} : v;
    auto [w0, w1] = residue_pair(e, w);
    if (!(w0 == ((want.s0 % e) + e) % e && w1 == ((want.s1 % e) + e) % e)) b.swap();
    int gap = b.cur.s1 - b.cur.s0; // threshold: gap > n-1, i.e. gap + ke >= n
    int k = std::max(0, ceil_div(*n - gap, e));
    for (int i = 0; i < k; ++i) b.raise();
    if (plus) b.swap();
    b.stabilize();
    plan.steps = std::move(b.steps);
  }
  simplify(plan.steps);
  return plan;
}

Charge replay_plan_charges(const RelabelPlan& plan) {
  Charge c = plan.source;
  for (const RelabelStep& s : plan.steps) c = step_charge(plan.e, c, s, true);
  return c;
}

namespace {

// Good-node strip: residue word from bp down to the empty bipartition, or
// nullopt if stripping stalls (bp is not in this labelling's set).
std::optional<std::vector<Residue>> strip_word(const Bipartition& bp, Modulus e,
                                               const NodeOrder& order, StripOrder strip) {
  std::vector<Residue> word;
  Bipartition cur = bp;
  while (!cur.empty()) {
    std::vector<Residue> candidates;
    if (e.is_finite()) {
      for (int i = 0; i < e.value(); ++i) candidates.push_back(Residue{i, e});
    } else {
      std::set<long long> contents;
      for (NodeCoord n : removable_nodes(cur)) contents.insert(content(n, order.charge()));
      for (long long c : contents) candidates.push_back(Residue{c, e});
    }
    if (strip == StripOrder::largest_residue_first)
      std::reverse(candidates.begin(), candidates.end());
    bool moved = false;
    for (Residue i : candidates) {
      if (auto g = good_node(cur, i, e, order)) {
        word.push_back(i);
        cur = remove_node(cur, *g);
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  return word;
}

} // namespace

bool is_uglov_member(const Bipartition& bp, Modulus e, const NodeOrder& order) {
  return strip_word(bp, e, order, StripOrder::smallest_residue_first).has_value();
}

Bipartition relabel_recursive(const Bipartition& bp, Modulus e, const NodeOrder& from,
                              const NodeOrder& to, StripOrder strip) {
  bool same_classes;
  if (e.is_finite()) {
    same_classes = congruent(e.value(), from.charge(), to.charge());
  } else {
    auto key = [](Charge c) { return std::minmax(c.s0, c.s1); };
    same_classes = key(from.charge()) == key(to.charge());
  }
  if (!same_classes) throw error("incompatible charges: residue multisets differ");
  auto word = strip_word(bp, e, from, strip);
  if (!word) throw error("bipartition is not a member under the source labelling");
  Bipartition cur;
  for (auto it = word->rbegin(); it != word->rend(); ++it) {
    auto gamma = good_node_addable(cur, *it, e, to);
    if (!gamma) throw error("replay stalled: labellings are not isomorphic");
    cur = add_node(cur, *gamma);
  }
  return cur;
}

Bipartition relabel(const Bipartition& bp, int e, Charge source, ChargeTarget target) {
  Modulus mod = Modulus::finite(e);
  if (!is_uglov_member(bp, mod, NodeOrder::uglov(source)))
    throw error("bipartition is not a member under the source labelling");
  RelabelPlan plan = make_plan(e, source, target, bp.rank());
  Bipartition cur = bp;
  Charge c = source;
  for (const RelabelStep& s : plan.steps) {
    switch (s.op) {
      case RelabelStep::Op::shift:
      case RelabelStep::Op::stabilize: break;
      case RelabelStep::Op::swap: cur = cur.swapped(); break;
      case RelabelStep::Op::raise: cur = pair_swap(cur, c); break;
      case RelabelStep::Op::lower:
        cur = pair_swap_inverse(cur, Charge{c.s0, c.s1 - e});
        break;
    }
    c = step_charge(e, c, s, true);
  }
  return cur;
}

nlohmann::json to_json(const RelabelPlan& plan) {
  nlohmann::json j;
  j["e"] = plan.e;
  j["source"] = {plan.source.s0, plan.source.s1};
  switch (plan.target.kind) {
    case ChargeTarget::Kind::exact:
      j["target"] = {{"kind", "exact"}, {"charge", {plan.target.charge.s0, plan.target.charge.s1}}};
      break;
    case ChargeTarget::Kind::asymptotic_plus:
      j["target"] = {{"kind", "asymptotic_plus"},
                     {"charge", {plan.target.charge.s0, plan.target.charge.s1}}};
      break;
    case ChargeTarget::Kind::asymptotic_minus:
      j["target"] = {{"kind", "asymptotic_minus"},
                     {"charge", {plan.target.charge.s0, plan.target.charge.s1}}};
      break;
  }
  auto steps = nlohmann::json::array();
  for (const RelabelStep& s : plan.steps) {
    switch (s.op) {
      case RelabelStep::Op::shift: steps.push_back({{"op", "shift"}, {"t", s.t}}); break;
      case RelabelStep::Op::swap: steps.push_back({{"op", "swap"}}); break;
      case RelabelStep::Op::raise: steps.push_back({{"op", "upsilon"}}); break;
      case RelabelStep::Op::lower: steps.push_back({{"op", "upsilon_inverse"}}); break;
      case RelabelStep::Op::stabilize: steps.push_back({{"op", "stabilize"}}); break;
    }
  }
  j["steps"] = std::move(steps);
  return j;
}

} // namespace uglov
