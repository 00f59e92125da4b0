#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace uglov {

// Integer partition: weakly decreasing positive parts.  part(k) is 1-based
// and reads 0 past the last row, so "row r+1" questions need no bounds fuss.
// Trailing zeros are accepted on input and stripped, never stored.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int part(int row) const; // 1-based; 0 beyond the last row
  int rows() const { return static_cast<int>(parts_.size()); }
  int rank() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

// Ordered pair of partitions.  Components are indexed 0 and 1 throughout.
class Bipartition {
public:
  Bipartition() = default;
  Bipartition(Partition first, Partition second)
      : comp_{std::move(first), std::move(second)} {}

  const Partition& component(int c) const;
  int rank() const { return comp_[0].rank() + comp_[1].rank(); }
  bool empty() const { return comp_[0].empty() && comp_[1].empty(); }
  Bipartition swapped() const { return Bipartition(comp_[1], comp_[0]); }

  auto operator<=>(const Bipartition&) const = default;

private:
  Partition comp_[2];
};

// Canonical text forms: "4,3,1,1" / "-" for a partition,
// "[4,3,1,1|4]" / "[-|3,2,2,2,1]" / "[-|-]" for a bipartition.
std::string to_text(const Partition& p);
std::string to_text(const Bipartition& bp);
Partition parse_partition(std::string_view text);
Bipartition parse_bipartition(std::string_view text);

// All partitions of n, in canonical (operator<) order.
std::vector<Partition> partitions_of(int n);
// All bipartitions of total rank n, in canonical order.
std::vector<Bipartition> all_bipartitions(int n);

} // namespace uglov
