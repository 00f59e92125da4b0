#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "uglov/signature.hpp"

using namespace uglov;

namespace {

// Positions 1..k as dummy nodes so reductions can be followed by eye.
std::vector<SignatureEntry> word(const std::string& letters) {
  std::vector<SignatureEntry> out;
  for (std::size_t k = 0; k < letters.size(); ++k)
    out.push_back({NodeCoord{static_cast<int>(k) + 1, 1, 0},
                   letters[k] == 'A' ? NodeKind::addable : NodeKind::removable});
  return out;
}

// Reference reduction: repeatedly delete the first adjacent (removable,
// addable) pair until none is left.
ReducedSignature naive_reduce(std::vector<SignatureEntry> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k].kind == NodeKind::removable && w[k + 1].kind == NodeKind::addable) {
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  ReducedSignature out;
  for (const SignatureEntry& entry : w)
    (entry.kind == NodeKind::addable ? out.addable : out.removable).push_back(entry.node);
  return out;
}

} // namespace

TEST_CASE("reduction fixtures") {
  auto r = reduce_signature(word("RRAR"));
  REQUIRE(r.removable.size() == 2);
  CHECK(r.removable[0].row == 1);
  CHECK(r.removable[1].row == 4);
  CHECK(r.addable.empty());

  r = reduce_signature(word("AR"));
  CHECK(r.addable.size() == 1);
  CHECK(r.removable.size() == 1);

  r = reduce_signature(word("RARA"));
  CHECK(r.addable.empty());
  CHECK(r.removable.empty());

  r = reduce_signature(word("AARR"));
  CHECK(r.addable.size() == 2);
  CHECK(r.removable.size() == 2);

  CHECK(reduce_signature({}).addable.empty());
}

TEST_CASE("single pass agrees with fixpoint deletion on every word up to length 12") {
  for (int len = 0; len <= 12; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string letters;
      for (int k = 0; k < len; ++k) letters += (mask >> k) & 1 ? 'A' : 'R';
      auto w = word(letters);
      auto fast = reduce_signature(w);
      auto slow = naive_reduce(w);
      REQUIRE(fast.addable == slow.addable);
      REQUIRE(fast.removable == slow.removable);
    }
  }
}

TEST_CASE("worked signature: ((4,3,1,1),(4)), e=4, charge (0,6), residue 1") {
  Bipartition bp = parse_bipartition("[4,3,1,1|4]");
  Modulus e = Modulus::finite(4);
  NodeOrder ord = NodeOrder::uglov({0, 6});
  Residue i{1, e};

  auto entries = signature_entries(bp, i, e, ord);
  REQUIRE(entries.size() == 4);
  CHECK((entries[0] == SignatureEntry{{4, 1, 0}, NodeKind::removable}));
  CHECK((entries[1] == SignatureEntry{{2, 3, 0}, NodeKind::removable}));
  CHECK((entries[2] == SignatureEntry{{2, 1, 1}, NodeKind::addable}));
  CHECK((entries[3] == SignatureEntry{{1, 4, 1}, NodeKind::removable}));

  auto normals = normal_nodes(bp, i, e, ord);
  CHECK((normals == std::vector<NodeCoord>{{4, 1, 0}, {1, 4, 1}}));
  REQUIRE(good_node(bp, i, e, ord).has_value());
  CHECK((*good_node(bp, i, e, ord) == NodeCoord{4, 1, 0}));
  CHECK_FALSE(good_node_addable(bp, i, e, ord).has_value()); // the addable cancels
}

TEST_CASE("tied contents resolve by component before reducing") {
  // ((1),-) at charge (0,0), e=2, residue 0: the addable (1,1,1) sorts before
  // the removable (1,1,0), so nothing cancels.
  Bipartition bp = parse_bipartition("[1|-]");
  Modulus e = Modulus::finite(2);
  NodeOrder ord = NodeOrder::uglov({0, 0});
  Residue zero{0, e};

  auto entries = signature_entries(bp, zero, e, ord);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].kind == NodeKind::addable);
  CHECK(entries[1].kind == NodeKind::removable);
  CHECK((*good_node(bp, zero, e, ord) == NodeCoord{1, 1, 0}));
  CHECK((*good_node_addable(bp, zero, e, ord) == NodeCoord{1, 1, 1}));

  // the empty bipartition: two addable 0-nodes, none for residue 1
  Bipartition empty;
  CHECK((*good_node_addable(empty, zero, e, ord) == NodeCoord{1, 1, 0}));
  CHECK_FALSE(good_node_addable(empty, Residue{1, e}, e, ord).has_value());
  CHECK_FALSE(good_node(empty, zero, e, ord).has_value());
}

TEST_CASE("good node and good addable node invert each other") {
  for (Modulus e : {Modulus::finite(2), Modulus::finite(3)}) {
    std::vector<NodeOrder> orders = {NodeOrder::uglov({0, 1}),
                                     NodeOrder::asymptotic_plus(0, 1),
                                     NodeOrder::asymptotic_minus(0, 1)};
    for (const NodeOrder& ord : orders) {
      for (int n = 0; n <= 6; ++n) {
        for (const Bipartition& bp : all_bipartitions(n)) {
          for (int iv = 0; iv < e.value(); ++iv) {
            Residue i{iv, e};
            if (auto gamma = good_node_addable(bp, i, e, ord)) {
              Bipartition up = add_node(bp, *gamma);
              REQUIRE(good_node(up, i, e, ord).has_value());
              CHECK(*good_node(up, i, e, ord) == *gamma);
            }
            if (auto g = good_node(bp, i, e, ord)) {
              Bipartition down = remove_node(bp, *g);
              REQUIRE(good_node_addable(down, i, e, ord).has_value());
              CHECK(*good_node_addable(down, i, e, ord) == *g);
            }
          }
        }
      }
    }
  }
}
