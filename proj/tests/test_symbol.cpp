#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "uglov/crystal.hpp"
#include "uglov/error.hpp"
#include "uglov/symbol.hpp"

using namespace uglov;

TEST_CASE("worked symbol: ((2,2,1),(3,2)) at (0,2), m = 4") {
  Bipartition bp = parse_bipartition("[2,2,1|3,2]");
  Symbol s = to_symbol(bp, {0, 2}, 4);
  CHECK((s.top() == std::vector<int>{8, 6, 3, 2, 1, 0}));
  CHECK((s.bottom() == std::vector<int>{5, 4, 2, 0}));
  CHECK(s.padding() == 4);
  CHECK((s.charge() == Charge{0, 2}));
  CHECK(s.standard());
  CHECK(to_text(s) == "0 1 2 3 6 8\n0 2 4 5");
  CHECK(from_symbol(s) == bp);

  // canonical padding: rows0=3, s0=0 forces m = 4
  CHECK(canonical_padding(bp, {0, 2}) == 4);
  CHECK(to_symbol(bp, {0, 2}) == s);

  auto theta = down_pairing(s);
  CHECK((theta.matches == std::vector<std::pair<int, int>>{{5, 1}, {4, 3}, {2, 2}, {0, 0}}));
  CHECK((theta.pairs() == std::vector<std::pair<int, int>>{{5, 1}, {4, 3}}));
}

TEST_CASE("worked symbol: ((8),(4)) at (0,1), m = 2") {
  Bipartition bp = parse_bipartition("[8|4]");
  CHECK(canonical_padding(bp, {0, 1}) == 2);
  Symbol s = to_symbol(bp, {0, 1});
  CHECK((s.top() == std::vector<int>{6, 1, 0}));
  CHECK((s.bottom() == std::vector<int>{9, 0}));
  CHECK(s.standard());
  auto theta = down_pairing(s);
  CHECK((theta.pairs() == std::vector<std::pair<int, int>>{{9, 6}}));
}

TEST_CASE("decoding a swapped symbol") {
  Symbol swapped({8, 6, 5, 4, 2, 0}, {3, 2, 1, 0}, {0, 2}, 4);
  CHECK(from_symbol(swapped) == parse_bipartition("[-|3,2,2,2,1]"));
}

TEST_CASE("symbol validation") {
  CHECK_THROWS_AS(to_symbol(Bipartition(), {1, 0}, 1), error);   // s0 > s1
  CHECK_THROWS_AS(to_symbol(Bipartition(), {-1, 0}, 2), error);  // negative charge
  CHECK_THROWS_AS(to_symbol(parse_bipartition("[2,2,1|3,2]"), {0, 2}, 3), error); // m too small
  CHECK_THROWS_AS(Symbol({1, 0}, {0}, {0, 1}, 2), error);        // wrong row lengths
  CHECK_THROWS_AS(Symbol({2, 1, 0}, {1, 1}, {0, 1}, 2), error);  // bottom not decreasing
  CHECK_THROWS_AS(Symbol({2, 1, -1}, {1, 0}, {0, 1}, 2), error); // negative entry
  CHECK_THROWS_AS(Symbol({1, 0}, {1, 0}, {0, 0}, -1), error);    // negative padding

  // a non-standard symbol has no downward matching
  Symbol bad = to_symbol(parse_bipartition("[-|1]"), {0, 0});
  CHECK_FALSE(bad.standard());
  CHECK_THROWS_AS(down_pairing(bad), error);
}

TEST_CASE("pair swap reproduces the worked chain") {
  CHECK(pair_swap(parse_bipartition("[2,2,1|3,2]"), {0, 2}) == parse_bipartition("[-|3,2,2,2,1]"));
  CHECK(pair_swap(parse_bipartition("[8|4]"), {0, 1}) == parse_bipartition("[5|7]"));
  CHECK(pair_swap(parse_bipartition("[5|7]"), {0, 5}) == parse_bipartition("[4|7,1]"));
  CHECK(pair_swap(parse_bipartition("[4|7,1]"), {0, 9}) == parse_bipartition("[4|7,1]"));
  CHECK(pair_swap(Bipartition(), {0, 0}) == Bipartition());
}

TEST_CASE("upward matching inverts the swap") {
  Symbol s = to_symbol(parse_bipartition("[5|7]"), {0, 1});
  auto tau = up_pairing(s);
  CHECK((tau.pairs() == std::vector<std::pair<int, int>>{{6, 9}}));
  CHECK(pair_swap_inverse(parse_bipartition("[5|7]"), {0, 1}) == parse_bipartition("[8|4]"));
  CHECK(pair_swap_inverse(parse_bipartition("[-|3,2,2,2,1]"), {0, 2}) ==
        parse_bipartition("[2,2,1|3,2]"));
  CHECK(pair_swap_inverse(parse_bipartition("[4|7,1]"), {0, 9}) == parse_bipartition("[4|7,1]"));

  // not in the image: no top entry can absorb the bottom row end
  CHECK_THROWS_AS(pair_swap_inverse(parse_bipartition("[1|-]"), {0, 0}), error);
}

TEST_CASE("members have standard symbols and the swap is rank preserving") {
  for (int e = 2; e <= 3; ++e) {
    Modulus mod = Modulus::finite(e);
    for (int s0 = 0; s0 < e; ++s0) {
      for (int s1 = s0; s1 < e; ++s1) {
        Charge c{s0, s1};
        auto levels = enumerate_levels(mod, NodeOrder::uglov(c), 6);
        for (const auto& level : levels) {
          for (const Bipartition& bp : level) {
            CHECK(to_symbol(bp, c).standard());
            Bipartition up = pair_swap(bp, c);
            CHECK(up.rank() == bp.rank());
            // independence of the padding, and the two-sided inverse law
            int m = canonical_padding(bp, c);
            CHECK(pair_swap(bp, c, m + 1) == up);
            CHECK(pair_swap(bp, c, m + 5) == up);
            CHECK(pair_swap_inverse(up, c) == bp);
          }
        }
      }
    }
  }
}

TEST_CASE("symbol json carries the full state") {
  Symbol s = to_symbol(parse_bipartition("[2,2,1|3,2]"), {0, 2}, 4);
  nlohmann::json j = to_json(s);
  CHECK((j["charge"] == nlohmann::json::array({0, 2})));
  CHECK(j["m"] == 4);
  CHECK((j["top"] == nlohmann::json::array({0, 1, 2, 3, 6, 8})));
  CHECK((j["bottom"] == nlohmann::json::array({0, 2, 4, 5})));

  // rebuild from the payload (rows are serialized ascending, stored descending)
  auto top = j["top"].get<std::vector<int>>();
  auto bottom = j["bottom"].get<std::vector<int>>();
  std::reverse(top.begin(), top.end());
  std::reverse(bottom.begin(), bottom.end());
  Symbol rebuilt(top, bottom, Charge{j["charge"][0].get<int>(), j["charge"][1].get<int>()},
                 j["m"].get<int>());
  CHECK(rebuilt == s);
}
