#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "uglov/partition.hpp"

using namespace uglov;

TEST_CASE("partition validation and accessors") {
  Partition p({4, 3, 1, 1});
  CHECK(p.rows() == 4);
  CHECK(p.rank() == 9);
  CHECK(p.part(1) == 4);
  CHECK(p.part(4) == 1);
  CHECK(p.part(5) == 0);
  CHECK(p.part(100) == 0);
  CHECK_THROWS_AS(p.part(0), std::invalid_argument);

  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK(Partition().empty());
  CHECK(Partition(std::vector<int>{}).rank() == 0);

  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
}

TEST_CASE("bipartition components and swap") {
  Bipartition bp(Partition({2, 2, 1}), Partition({3, 2}));
  CHECK(bp.rank() == 10);
  CHECK(bp.component(0) == Partition({2, 2, 1}));
  CHECK(bp.component(1) == Partition({3, 2}));
  CHECK(bp.swapped() == Bipartition(Partition({3, 2}), Partition({2, 2, 1})));
  CHECK(bp.swapped().swapped() == bp);
  CHECK_THROWS_AS(bp.component(2), std::invalid_argument);
  CHECK(Bipartition().empty());
}

TEST_CASE("text round trip") {
  for (const char* text : {"[4,3,1,1|4]", "[-|3,2,2,2,1]", "[-|-]", "[8|4]", "[5|7]"}) {
    CHECK(to_text(parse_bipartition(text)) == text);
  }
  CHECK(parse_bipartition("[3,2,0|-]") == Bipartition(Partition({3, 2}), Partition()));
  CHECK(parse_bipartition(" [ 2 , 1 | 1 ] ") == Bipartition(Partition({2, 1}), Partition({1})));
  CHECK(to_text(Partition({5, 1})) == "5,1");
  CHECK(to_text(Partition()) == "-");
  CHECK(parse_partition("-").empty());

  CHECK_THROWS_AS(parse_bipartition("2,1|1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bipartition("[2,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bipartition("[1|2|3]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bipartition("[1,2|-]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bipartition("[-1|-]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bipartition("[a|b]"), std::invalid_argument);
}

TEST_CASE("generators are sorted, complete, duplicate free") {
  // #partitions of 0..8: 1 1 2 3 5 7 11 15 22
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) {
    auto ps = partitions_of(n);
    CHECK(static_cast<int>(ps.size()) == counts[n]);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK(ps[i].rank() == n);
      if (i > 0) CHECK(ps[i - 1] < ps[i]);
    }
    auto bps = all_bipartitions(n);
    long long expect = 0;
    for (int k = 0; k <= n; ++k)
      expect += static_cast<long long>(counts[k]) * counts[n - k];
    CHECK(static_cast<long long>(bps.size()) == expect);
    for (std::size_t i = 1; i < bps.size(); ++i) CHECK(bps[i - 1] < bps[i]);
  }
}
