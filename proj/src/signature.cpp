#include "uglov/signature.hpp"

#include <algorithm>

namespace uglov {

std::vector<SignatureEntry> signature_entries(const Bipartition& bp, Residue i, Modulus e,
                                              const NodeOrder& order) {
  std::vector<SignatureEntry> out;
  for (NodeCoord n : addable_nodes(bp, i, e, order)) out.push_back({n, NodeKind::addable});
  for (NodeCoord n : removable_nodes(bp, i, e, order)) out.push_back({n, NodeKind::removable});
  std::sort(out.begin(), out.end(), [&](const SignatureEntry& a, const SignatureEntry& b) {
    return order.precedes(a.node, b.node);
  });
  return out;
}

ReducedSignature reduce_signature(const std::vector<SignatureEntry>& entries) {
  ReducedSignature out;
  for (const SignatureEntry& e : entries) {
    if (e.kind == NodeKind::removable) {
      out.removable.push_back(e.node);
    } else if (!out.removable.empty()) {
      out.removable.pop_back(); // cancels the removable directly to its left
    } else {
      out.addable.push_back(e.node);
    }
  }
  return out;
}

std::vector<NodeCoord> normal_nodes(const Bipartition& bp, Residue i, Modulus e,
                                    const NodeOrder& order) {
  return reduce_signature(signature_entries(bp, i, e, order)).removable;
}

std::optional<NodeCoord> good_node(const Bipartition& bp, Residue i, Modulus e,
                                   const NodeOrder& order) {
  auto normals = normal_nodes(bp, i, e, order);
  if (normals.empty()) return std::nullopt;
  return normals.front();
}

std::optional<NodeCoord> good_node_addable(const Bipartition& bp, Residue i, Modulus e,
                                           const NodeOrder& order) {
  auto reduced = reduce_signature(signature_entries(bp, i, e, order));
  if (reduced.addable.empty()) return std::nullopt;
  return reduced.addable.back();
}

} // namespace uglov
