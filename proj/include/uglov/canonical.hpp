#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uglov/symbol.hpp"

namespace uglov {

// Membership in the sl_infinity highest-weight set for s0 <= s1:
// comp0 row i >= comp1 row i + s1 - s0 for all i.
bool is_sl_infinity_member(const Bipartition& bp, Charge charge);

struct CanonicalTerm {
  Bipartition bipartition;
  int degree = 0;

  friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;
};

// Canonical basis element attached to head: one term per subset of the
// symbol's pairs, graded by how many pairs were swapped.  All 2^p terms are
// distinct; the head is the unique degree-0 term and the full swap the unique
// top-degree one.
struct CanonicalElement {
  Bipartition head;
  Charge charge;
  std::vector<CanonicalTerm> terms; // sorted by (degree, bipartition)
};

// p > 20 pairs is refused (2^p terms).
CanonicalElement pair_orbit(const Bipartition& bp, Charge charge);

// The unique maximal-degree term of pair_orbit (all pairs swapped).
Bipartition top_degree_term(const Bipartition& bp, Charge charge);

// "b = [8|4] + v·[5|7]" style rendering.
std::string to_text(const CanonicalElement& el);
nlohmann::json to_json(const CanonicalElement& el);

} // namespace uglov
