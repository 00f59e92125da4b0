#include "uglov/canonical.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

#include "uglov/error.hpp"

namespace uglov {

bool is_sl_infinity_member(const Bipartition& bp, Charge charge) {
  if (charge.s0 > charge.s1) throw error("sl_infinity membership needs s0 <= s1");
  const Partition& p0 = bp.component(0);
  const Partition& p1 = bp.component(1);
  int d = charge.s1 - charge.s0;
  for (int i = 1; i <= p1.rows(); ++i)
    if (p0.part(i) < p1.part(i + d)) return false;
  return true;
}

CanonicalElement pair_orbit(const Bipartition& bp, Charge charge) {
  if (!is_sl_infinity_member(bp, charge))
    throw error("pair_orbit: bipartition is not an sl_infinity member");
  Symbol s = to_symbol(bp, charge);
  auto pairs = down_pairing(s).pairs();
  int p = static_cast<int>(pairs.size());
  if (p > 20) throw error("pair_orbit: more than 20 pairs");

  CanonicalElement el{bp, charge, {}};
  std::set<Bipartition> seen;
  for (unsigned mask = 0; mask < (1u << p); ++mask) {
    std::vector<int> top = s.top(), bottom = s.bottom();
    for (int i = 0; i < p; ++i) {
      if (!(mask & (1u << i))) continue;
      auto [b, t] = pairs[static_cast<std::size_t>(i)];
      *std::find(bottom.begin(), bottom.end(), b) = t;
      *std::find(top.begin(), top.end(), t) = b;
    }
    std::sort(top.rbegin(), top.rend());
    std::sort(bottom.rbegin(), bottom.rend());
    Bipartition term =
        from_symbol(Symbol(std::move(top), std::move(bottom), charge, s.padding()));
    if (!seen.insert(term).second)
      throw error("pair_orbit: colliding terms"); // pair swaps are always distinct
    el.terms.push_back({std::move(term), std::popcount(mask)});
  }
  std::sort(el.terms.begin(), el.terms.end(),
            [](const CanonicalTerm& a, const CanonicalTerm& b) {
              return std::tie(a.degree, a.bipartition) < std::tie(b.degree, b.bipartition);
            });
  return el;
}

Bipartition top_degree_term(const Bipartition& bp, Charge charge) {
  CanonicalElement el = pair_orbit(bp, charge);
  int max_degree = 0;
  for (const CanonicalTerm& t : el.terms) max_degree = std::max(max_degree, t.degree);
  std::vector<const CanonicalTerm*> tops;
  for (const CanonicalTerm& t : el.terms)
    if (t.degree == max_degree) tops.push_back(&t);
  if (tops.size() != 1) throw error("top_degree_term: maximal degree not unique");
  return tops.front()->bipartition;
}

std::string to_text(const CanonicalElement& el) {
  std::string out = "b = ";
  bool first = true;
  for (const CanonicalTerm& t : el.terms) {
    if (!first) out += " + ";
    if (t.degree == 1)
      out += "v·";
    else if (t.degree > 1)
      out += "v^" + std::to_string(t.degree) + "·";
    out += to_text(t.bipartition);
    first = false;
  }
  return out;
}

nlohmann::json to_json(const CanonicalElement& el) {
  nlohmann::json j;
  j["head"] = to_text(el.head);
  j["charge"] = {el.charge.s0, el.charge.s1};
  auto terms = nlohmann::json::array();
  for (const CanonicalTerm& t : el.terms)
    terms.push_back({{"bipartition", to_text(t.bipartition)}, {"degree", t.degree}});
  j["terms"] = std::move(terms);
  return j;
}

} // namespace uglov
