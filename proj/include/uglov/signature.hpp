#pragma once

#include <optional>
#include <vector>

#include "uglov/node.hpp"

namespace uglov {

enum class NodeKind { addable, removable };

struct SignatureEntry {
  NodeCoord node;
  NodeKind kind;

  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

// Addable and removable i-nodes merged, ascending under the order.
std::vector<SignatureEntry> signature_entries(const Bipartition& bp, Residue i, Modulus e,
                                              const NodeOrder& order);

// Reduction deletes removable-immediately-before-addable pairs until none
// remain; the reduced word is always (addables)(removables).  Single left to
// right pass: an addable cancels the most recent surviving removable, since
// everything between them is already cancelled.
struct ReducedSignature {
  std::vector<NodeCoord> addable;   // surviving addables, ascending
  std::vector<NodeCoord> removable; // normal nodes, ascending
};
ReducedSignature reduce_signature(const std::vector<SignatureEntry>& entries);

// Normal i-nodes = removables surviving reduction.
std::vector<NodeCoord> normal_nodes(const Bipartition& bp, Residue i, Modulus e,
                                    const NodeOrder& order);

// Good i-node: minimal normal node.  Empty when no removable survives.
std::optional<NodeCoord> good_node(const Bipartition& bp, Residue i, Modulus e,
                                   const NodeOrder& order);

// Addable i-node gamma such that gamma is the good i-node of bp + gamma,
// i.e. the maximal surviving addable.  Empty when none survives.
std::optional<NodeCoord> good_node_addable(const Bipartition& bp, Residue i, Modulus e,
                                           const NodeOrder& order);

} // namespace uglov
