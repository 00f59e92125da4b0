#pragma once

#include <compare>
#include <vector>

#include "uglov/charge.hpp"
#include "uglov/partition.hpp"

namespace uglov {

// Node (box) of a bipartition diagram: 1-based row and column, component 0/1.
struct NodeCoord {
  int row = 0;
  int col = 0;
  int comp = 0;

  auto operator<=>(const NodeCoord&) const = default;
};

// Charged content col - row + s_comp.
long long content(NodeCoord node, Charge charge);
Residue residue(NodeCoord node, Modulus e, Charge charge);

// Total order on the addable/removable nodes of one bipartition sharing a
// residue.  Three variants:
//   uglov            x < y iff content(x) < content(y), ties broken by the
//                    component rule (equal content: larger comp is smaller)
//   asymptotic_plus  x < y iff y.comp < x.comp, then x.row > y.row
//   asymptotic_minus x < y iff y.comp > x.comp, then x.row > y.row
// The asymptotic variants carry their (v0, v1) pair only to fix residues.
// Distinct addable/removable same-residue nodes never tie; a tie anywhere
// else is a caller bug and throws.
class NodeOrder {
public:
  enum class Kind { uglov, asymptotic_plus, asymptotic_minus };

  static NodeOrder uglov(Charge charge) { return NodeOrder(Kind::uglov, charge); }
  static NodeOrder asymptotic_plus(int v0, int v1) {
    return NodeOrder(Kind::asymptotic_plus, Charge{v0, v1});
  }
  static NodeOrder asymptotic_minus(int v0, int v1) {
    return NodeOrder(Kind::asymptotic_minus, Charge{v0, v1});
  }

  Kind kind() const { return kind_; }
  Charge charge() const { return charge_; }
  bool precedes(NodeCoord a, NodeCoord b) const; // strict; throws on ties
  std::string to_text() const;

  friend bool operator==(const NodeOrder&, const NodeOrder&) = default;

private:
  NodeOrder(Kind k, Charge c) : kind_(k), charge_(c) {}
  Kind kind_;
  Charge charge_;
};

// less / greater; x == y is rejected.
std::strong_ordering compare_nodes(NodeCoord x, NodeCoord y, const NodeOrder& order);

// Addable / removable nodes of residue i, sorted ascending under the order.
// The order's own charge fixes the residues.
std::vector<NodeCoord> addable_nodes(const Bipartition& bp, Residue i, Modulus e,
                                     const NodeOrder& order);
std::vector<NodeCoord> removable_nodes(const Bipartition& bp, Residue i, Modulus e,
                                       const NodeOrder& order);

// Unfiltered variants: every addable / removable node, component 0 before 1,
// rows ascending within a component.
std::vector<NodeCoord> addable_nodes(const Bipartition& bp);
std::vector<NodeCoord> removable_nodes(const Bipartition& bp);

// Diagram surgery; the node must actually be addable (resp. removable).
Bipartition add_node(const Bipartition& bp, NodeCoord node);
Bipartition remove_node(const Bipartition& bp, NodeCoord node);

} // namespace uglov
