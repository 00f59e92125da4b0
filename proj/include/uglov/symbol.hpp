#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "uglov/charge.hpp"
#include "uglov/partition.hpp"

namespace uglov {

// Charged symbol of a bipartition: two strictly decreasing rows of
// nonnegative shifted first-column hooks,
//   bottom_j = comp0 part j - j + s0 + m   (j = 1..m+s0)
//   top_j    = comp1 part j - j + s1 + m   (j = 1..m+s1)
// for a padding m with m > max(rows0 - s0, rows1 - s1) and 0 <= s0 <= s1.
// Rows are stored in index order (largest entry first).
class Symbol {
public:
  Symbol(std::vector<int> top, std::vector<int> bottom, Charge charge, int m);

  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }
  Charge charge() const { return charge_; }
  int padding() const { return m_; }

  // Standard: in the ascending, left-aligned picture every top entry sits
  // under-or-equal to the bottom entry of its column, i.e. the k-th smallest
  // top entry <= the k-th smallest bottom entry for k = 1..m+s0.
  bool standard() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;

private:
  std::vector<int> top_, bottom_;
  Charge charge_;
  int m_;
};

// Smallest legal padding, max(1, rows0 - s0 + 1, rows1 - s1 + 1).
int canonical_padding(const Bipartition& bp, Charge charge);

Symbol to_symbol(const Bipartition& bp, Charge charge, std::optional<int> m = std::nullopt);
Bipartition from_symbol(const Symbol& s);

// Injective matching of bottom entries into top entries.  matches lists
// (bottom, top) by bottom entry descending; pairs() keeps the non-fixed ones.
struct Pairing {
  std::vector<std::pair<int, int>> matches;
  std::vector<std::pair<int, int>> pairs() const;
};

// Downward matching: bottom entries processed smallest first, each matched to
// the largest unused top entry <= it.  Exists iff the symbol is standard.
Pairing down_pairing(const Symbol& s);

// Upward matching: bottom entries processed largest first, each matched to
// the smallest unused top entry >= it.  Exists iff the symbol encodes a
// member of the pair-swap image.
Pairing up_pairing(const Symbol& s);

// Swap every non-fixed matched pair between the rows, resort, decode.
// Raises the labelling charge (s0, s1) -> (s0, s1 + e); independent of m.
Bipartition pair_swap(const Bipartition& bp, Charge charge,
                      std::optional<int> m = std::nullopt);
// Exact inverse: pair_swap_inverse(pair_swap(bp, c), c) == bp.
Bipartition pair_swap_inverse(const Bipartition& bp, Charge charge,
                              std::optional<int> m = std::nullopt);

// Two lines, entries ascending, top row first.
std::string to_text(const Symbol& s);
nlohmann::json to_json(const Symbol& s);

} // namespace uglov
