#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uglov/signature.hpp"

namespace uglov {

// Level-synchronous generation of the bipartitions reachable from the empty
// one by good-node additions: levels[k] holds rank k, sorted canonically.
// Uglov order => Uglov bipartitions; asymptotic orders => Kleshchev sets.
std::vector<std::vector<Bipartition>> enumerate_levels(Modulus e, const NodeOrder& order,
                                                       int max_rank);
std::vector<Bipartition> enumerate_uglov(Modulus e, const NodeOrder& order, int n);

// Direct membership test for 0 <= s0 <= s1 < e:
//  (1) comp0 row i >= comp1 row i+s1-s0, comp1 row i >= comp0 row i+e+s0-s1
//  (2) for every occurring row length the right-end residues miss some class
bool is_flotw(const Bipartition& bp, int e, Charge charge);

struct CrystalEdge {
  Bipartition from;
  long long label = 0; // residue value
  Bipartition to;

  auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  Modulus e = Modulus::infinity();
  NodeOrder order = NodeOrder::uglov(Charge{});
  int max_rank = 0;
  std::vector<std::vector<Bipartition>> levels;
  std::vector<CrystalEdge> edges; // sorted by (from, label)
};

CrystalGraph build_crystal(Modulus e, const NodeOrder& order, int max_rank);

std::string to_dot(const CrystalGraph& g);
nlohmann::json to_json(const CrystalGraph& g);

} // namespace uglov
