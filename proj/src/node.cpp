#include "uglov/node.hpp"

#include <algorithm>

#include "uglov/error.hpp"

namespace uglov {

long long content(NodeCoord node, Charge charge) {
  return static_cast<long long>(node.col) - node.row + charge.component(node.comp);
}

Residue residue(NodeCoord node, Modulus e, Charge charge) {
  return reduce_residue(content(node, charge), e);
}

bool NodeOrder::precedes(NodeCoord a, NodeCoord b) const {
  if (a == b) throw std::invalid_argument("node order: comparing a node with itself");
  switch (kind_) {
    case Kind::uglov: {
      long long ca = content(a, charge_), cb = content(b, charge_);
      if (ca != cb) return ca < cb;
      if (a.comp != b.comp) return b.comp < a.comp; // equal content: larger comp first
      break;
    }
    case Kind::asymptotic_plus:
      if (a.comp != b.comp) return b.comp < a.comp;
      if (a.row != b.row) return b.row < a.row;
      break;
    case Kind::asymptotic_minus:
      if (a.comp != b.comp) return b.comp > a.comp;
      if (a.row != b.row) return b.row < a.row;
      break;
  }
  // Only reachable off the addable/removable domain, where at most one node
  // per diagonal (uglov) resp. per row (asymptotic) exists.
  throw error("node order: incomparable distinct nodes");
}

std::string NodeOrder::to_text() const {
  std::string head;
  switch (kind_) {
    case Kind::uglov: head = "uglov"; break;
    case Kind::asymptotic_plus: head = "asymptotic_plus"; break;
    case Kind::asymptotic_minus: head = "asymptotic_minus"; break;
  }
  return head + "(" + std::to_string(charge_.s0) + "," + std::to_string(charge_.s1) + ")";
}

std::strong_ordering compare_nodes(NodeCoord x, NodeCoord y, const NodeOrder& order) {
  return order.precedes(x, y) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<NodeCoord> addable_nodes(const Bipartition& bp) {
  std::vector<NodeCoord> out;
  for (int c = 0; c < 2; ++c) {
    const Partition& p = bp.component(c);
    for (int a = 1; a <= p.rows() + 1; ++a) {
      if (a == 1 || p.part(a - 1) > p.part(a)) out.push_back({a, p.part(a) + 1, c});
    }
  }
  return out;
}

std::vector<NodeCoord> removable_nodes(const Bipartition& bp) {
  std::vector<NodeCoord> out;
  for (int c = 0; c < 2; ++c) {
    const Partition& p = bp.component(c);
    for (int a = 1; a <= p.rows(); ++a) {
      if (p.part(a) > p.part(a + 1)) out.push_back({a, p.part(a), c});
    }
  }
  return out;
}

namespace {

std::vector<NodeCoord> filter_sorted(std::vector<NodeCoord> nodes, Residue i, Modulus e,
                                     const NodeOrder& order) {
  if (i.mod != e) throw std::invalid_argument("residue modulus does not match e");
  std::vector<NodeCoord> out;
  for (NodeCoord n : nodes)
    if (residue(n, e, order.charge()) == i) out.push_back(n);
  std::sort(out.begin(), out.end(),
            [&](NodeCoord a, NodeCoord b) { return order.precedes(a, b); });
  return out;
}

} // namespace

std::vector<NodeCoord> addable_nodes(const Bipartition& bp, Residue i, Modulus e,
                                     const NodeOrder& order) {
  return filter_sorted(addable_nodes(bp), i, e, order);
}

std::vector<NodeCoord> removable_nodes(const Bipartition& bp, Residue i, Modulus e,
                                       const NodeOrder& order) {
  return filter_sorted(removable_nodes(bp), i, e, order);
}

Bipartition add_node(const Bipartition& bp, NodeCoord node) {
  const Partition& p = bp.component(node.comp);
  if (node.col != p.part(node.row) + 1 ||
      !(node.row == 1 || p.part(node.row - 1) > p.part(node.row)))
    throw std::invalid_argument("add_node: node is not addable");
  std::vector<int> parts = p.parts();
  if (node.row == p.rows() + 1)
    parts.push_back(1);
  else
    parts[static_cast<std::size_t>(node.row) - 1] += 1;
  Partition grown{std::move(parts)};
  return node.comp == 0 ? Bipartition(std::move(grown), bp.component(1))
                        : Bipartition(bp.component(0), std::move(grown));
}

Bipartition remove_node(const Bipartition& bp, NodeCoord node) {
  const Partition& p = bp.component(node.comp);
  if (node.col != p.part(node.row) || node.col == 0 || p.part(node.row) <= p.part(node.row + 1))
    throw std::invalid_argument("remove_node: node is not removable");
  std::vector<int> parts = p.parts();
  parts[static_cast<std::size_t>(node.row) - 1] -= 1;
  Partition shrunk{std::move(parts)}; // ctor strips the trailing zero
  return node.comp == 0 ? Bipartition(std::move(shrunk), bp.component(1))
                        : Bipartition(bp.component(0), std::move(shrunk));
}

} // namespace uglov
