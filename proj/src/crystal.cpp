#include "uglov/crystal.hpp"

#include <algorithm>
#include <set>

#include "uglov/error.hpp"

namespace uglov {

namespace {

void check_order(Modulus e, const NodeOrder& order) {
  if (order.kind() == NodeOrder::Kind::uglov) return;
  if (!e.is_finite())
    throw std::invalid_argument("asymptotic orders require a finite modulus");
  Charge v = order.charge();
  if (v.s0 < 0 || v.s0 >= e.value() || v.s1 < 0 || v.s1 >= e.value())
    throw std::invalid_argument("asymptotic order parameters must lie in [0, e)");
}

// Candidate edge labels out of bp: all residue classes for finite e, the
// (finitely many) addable contents otherwise.
std::vector<Residue> candidate_residues(const Bipartition& bp, Modulus e, Charge charge) {
  std::vector<Residue> out;
  if (e.is_finite()) {
    for (int i = 0; i < e.value(); ++i) out.push_back(Residue{i, e});
    return out;
  }
  std::set<long long> contents;
  for (NodeCoord n : addable_nodes(bp)) contents.insert(content(n, charge));
  for (long long c : contents) out.push_back(Residue{c, e});
  return out;
}

} // namespace

CrystalGraph build_crystal(Modulus e, const NodeOrder& order, int max_rank) {
  if (max_rank < 0) throw std::invalid_argument("max_rank must be nonnegative");
  check_order(e, order);
  CrystalGraph g;
  g.e = e;
  g.order = order;
  g.max_rank = max_rank;
  g.levels.push_back({Bipartition{}});
  for (int k = 1; k <= max_rank; ++k) {
    std::set<Bipartition> next;
    for (const Bipartition& bp : g.levels.back()) {
      for (Residue i : candidate_residues(bp, e, order.charge())) {
        if (auto gamma = good_node_addable(bp, i, e, order)) {
          Bipartition to = add_node(bp, *gamma);
          g.edges.push_back({bp, i.value, to});
          next.insert(std::move(to));
        }
      }
    }
    g.levels.emplace_back(next.begin(), next.end());
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<std::vector<Bipartition>> enumerate_levels(Modulus e, const NodeOrder& order,
                                                       int max_rank) {
  if (max_rank < 0) throw std::invalid_argument("rank must be nonnegative");
  check_order(e, order);
  std::vector<std::vector<Bipartition>> levels;
  levels.push_back({Bipartition{}});
  for (int k = 1; k <= max_rank; ++k) {
    std::set<Bipartition> next;
    for (const Bipartition& bp : levels.back()) {
      for (Residue i : candidate_residues(bp, e, order.charge())) {
        if (auto gamma = good_node_addable(bp, i, e, order)) next.insert(add_node(bp, *gamma));
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

std::vector<Bipartition> enumerate_uglov(Modulus e, const NodeOrder& order, int n) {
  return enumerate_levels(e, order, n).back();
}

bool is_flotw(const Bipartition& bp, int e, Charge charge) {
  if (e < 2) throw std::invalid_argument("modulus must be >= 2");
  if (!(0 <= charge.s0 && charge.s0 <= charge.s1 && charge.s1 < e))
    throw std::invalid_argument("flotw test needs 0 <= s0 <= s1 < e");
  const Partition& p0 = bp.component(0);
  const Partition& p1 = bp.component(1);
  int d = charge.s1 - charge.s0;
  int span = std::max(p0.rows(), p1.rows());
  for (int i = 1; i <= span; ++i) {
    if (p0.part(i) < p1.part(i + d)) return false;
    if (p1.part(i) < p0.part(i + e - d)) return false;
  }
  // Right-end residues per occurring row length must miss a class.
  std::set<int> lengths;
  for (int c = 0; c < 2; ++c)
    for (int v : bp.component(c).parts()) lengths.insert(v);
  for (int k : lengths) {
    std::set<long long> residues;
    for (int c = 0; c < 2; ++c) {
      const Partition& p = bp.component(c);
      for (int a = 1; a <= p.rows(); ++a)
        if (p.part(a) == k)
          residues.insert(residue(NodeCoord{a, k, c}, Modulus::finite(e), charge).value);
    }
    if (static_cast<int>(residues.size()) == e) return false;
  }
  return true;
}

std::string to_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n";
  out += "  rankdir=TB;\n";
  out += "  node [shape=box];\n";
  for (const auto& level : g.levels)
    for (const Bipartition& bp : level) out += "  \"" + to_text(bp) + "\";\n";
  for (const CrystalEdge& e : g.edges) {
    out += "  \"" + to_text(e.from) + "\" -> \"" + to_text(e.to) +
           "\" [label=\"" + std::to_string(e.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

nlohmann::json to_json(const CrystalGraph& g) {
  nlohmann::json j;
  if (g.e.is_finite())
    j["e"] = g.e.value();
  else
    j["e"] = "infinity";
  const char* kind = nullptr;
  switch (g.order.kind()) {
    case NodeOrder::Kind::uglov: kind = "uglov"; break;
    case NodeOrder::Kind::asymptotic_plus: kind = "asymptotic_plus"; break;
    case NodeOrder::Kind::asymptotic_minus: kind = "asymptotic_minus"; break;
  }
  j["order"] = {{"kind", kind},
                {"charge", {g.order.charge().s0, g.order.charge().s1}}};
  j["max_rank"] = g.max_rank;
  auto levels = nlohmann::json::array();
  for (const auto& level : g.levels) {
    auto row = nlohmann::json::array();
    for (const Bipartition& bp : level) row.push_back(to_text(bp));
    levels.push_back(std::move(row));
  }
  j["levels"] = std::move(levels);
  auto edges = nlohmann::json::array();
  for (const CrystalEdge& e : g.edges)
    edges.push_back({{"from", to_text(e.from)}, {"label", e.label}, {"to", to_text(e.to)}});
  j["edges"] = std::move(edges);
  return j;
}

} // namespace uglov
