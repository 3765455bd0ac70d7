#include <algorithm>
#include <stdexcept>
#include <variant>
#include <vector>

#include "doctest.h"

#include "fishburn/bijection.hpp"
#include "fishburn/json_io.hpp"
#include "fishburn/poset.hpp"

using namespace fishburn::poset;

namespace {

// The worked 8-element poset, labels a..h -> 0..7:
// D(a)={b,c,d,f,g,h}, D(b)={}, D(c)=D(d)={f,g,h},
// D(e)=D(f)=D(g)={h}, D(h)={}.
StrictPoset worked_example() {
  auto mask = [](std::initializer_list<int> xs) {
    std::uint64_t m = 0;
    for (int x : xs) m |= std::uint64_t{1} << x;
    return m;
  };
  StrictPoset p{8, std::vector<std::uint64_t>(8, 0)};
  p.down[0] = mask({1, 2, 3, 5, 6, 7});
  p.down[2] = p.down[3] = mask({5, 6, 7});
  p.down[4] = p.down[5] = p.down[6] = mask({7});
  return p;
}

}  // namespace

TEST_CASE("strict poset validity") {
  CHECK_NOTHROW(check_strict_poset(worked_example()));
  StrictPoset reflexive{2, {1, 0}};  // 0 < 0
  CHECK_THROWS_AS(check_strict_poset(reflexive), std::invalid_argument);
  StrictPoset intransitive{3, {0, 1, 2}};  // 0<1, 1<2 but not 0<2
  CHECK_THROWS_AS(check_strict_poset(intransitive), std::invalid_argument);
  StrictPoset chain3{3, {0, 1, 3}};
  CHECK_NOTHROW(check_strict_poset(chain3));
}

TEST_CASE("cover pairs and reconstruction") {
  const StrictPoset p = worked_example();
  const auto covers = cover_pairs(p);
  // b,f,g,h < a but only b,c,d are covered by a (f,g,h are below c,d).
  const std::vector<std::pair<int, int>> expect{
      {1, 0}, {2, 0}, {3, 0}, {5, 2}, {5, 3},
      {6, 2}, {6, 3}, {7, 4}, {7, 5}, {7, 6}};
  CHECK(covers == expect);
  CHECK(from_cover_pairs(8, covers) == p);

  CHECK_THROWS_AS(from_cover_pairs(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from_cover_pairs(1, {{0, 0}}), std::invalid_argument);
  // Arbitrary relation pairs are closed transitively.
  const StrictPoset chain = from_cover_pairs(3, {{0, 1}, {1, 2}});
  CHECK(chain.less(0, 2));
}

TEST_CASE("down-set chain of the worked example") {
  const StrictPoset p = worked_example();
  const auto result = down_set_chain(p);
  REQUIRE(std::holds_alternative<LevelPoset>(result));
  const LevelPoset lp = std::get<LevelPoset>(result);

  CHECK(lp.rank() == 4);
  CHECK(lp.chain == std::vector<std::uint64_t>{
                        0, 1ull << 7, (1ull << 5) | (1ull << 6) | (1ull << 7),
                        (1ull << 1) | (1ull << 2) | (1ull << 3) | (1ull << 5) |
                            (1ull << 6) | (1ull << 7)});
  CHECK(level_members(lp, 0) == std::vector<int>{1, 7});
  CHECK(level_members(lp, 1) == std::vector<int>{4, 5, 6});
  CHECK(level_members(lp, 2) == std::vector<int>{2, 3});
  CHECK(level_members(lp, 3) == std::vector<int>{0});

  // Maximal elements are a (=0) and e (=4); e has the smaller down-set.
  CHECK(maximal_mask(lp) == ((1ull << 0) | (1ull << 4)));
  CHECK(srank(lp) == 1);

  const auto s = poset_stats(lp);
  CHECK(s.length == 8);  // size
  CHECK(s.asc == 3);     // levels
  CHECK(s.last == 1);    // minmax
  CHECK(s.zeros == 2);   // number of minimal elements
  CHECK(to_strict(lp) == p);
  CHECK_NOTHROW(check_level_poset(lp));
}

TEST_CASE("down_set_chain rejects exactly the posets containing 2+2") {
  // Two disjoint 2-chains: 0<1, 2<3.
  const StrictPoset two_two = from_cover_pairs(4, {{0, 1}, {2, 3}});
  CHECK(contains_two_plus_two(two_two));
  const auto res = down_set_chain(two_two);
  REQUIRE(std::holds_alternative<IncomparableDownSets>(res));
  const auto w = std::get<IncomparableDownSets>(res);
  // The witnesses must really have incomparable down-sets.
  const auto dx = two_two.down[w.x];
  const auto dy = two_two.down[w.y];
  CHECK((dx & dy) != dx);
  CHECK((dx & dy) != dy);

  for (int n = 0; n <= 5; ++n)
    for (const auto& p : enumerate_strict_posets(n)) {
      const bool free22 = !contains_two_plus_two(p);
      const auto chain = down_set_chain(p);
      CHECK(free22 == std::holds_alternative<LevelPoset>(chain));
      if (free22) CHECK(to_strict(std::get<LevelPoset>(chain)) == p);
    }
}

TEST_CASE("pattern detectors on hand-built posets") {
  // 3-chain plus isolated element: 3+1 but not 2+2.
  const StrictPoset p31 = from_cover_pairs(4, {{0, 1}, {1, 2}});
  CHECK(contains_three_plus_one(p31));
  CHECK_FALSE(contains_two_plus_two(p31));

  // 4-chain: neither.
  const StrictPoset c4 = from_cover_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(contains_three_plus_one(c4));
  CHECK_FALSE(contains_two_plus_two(c4));

  // Antichain: neither.
  const StrictPoset a4{4, std::vector<std::uint64_t>(4, 0)};
  CHECK_FALSE(contains_three_plus_one(a4));
  CHECK_FALSE(contains_two_plus_two(a4));

  // Disjoint 2-chains: 2+2 but not 3+1.
  const StrictPoset p22 = from_cover_pairs(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(contains_three_plus_one(p22));
  CHECK(contains_two_plus_two(p22));

  // The worked example contains a 3+1 (h<f<a with e isolated from them)
  // but no 2+2.
  CHECK(contains_three_plus_one(worked_example()));
  CHECK_FALSE(contains_two_plus_two(worked_example()));
}

TEST_CASE("level poset structural validation") {
  LevelPoset ok{3, {0, 0, 1}, {0, (1ull << 0) | (1ull << 1)}};
  CHECK_NOTHROW(check_level_poset(ok));

  LevelPoset bad = ok;
  bad.chain = {1ull << 2, (1ull << 0) | (1ull << 1)};  // D_0 not empty
  CHECK_THROWS_AS(check_level_poset(bad), std::invalid_argument);

  bad = ok;
  bad.level_of = {0, 0, 0};  // element 2's down-set says level 1
  CHECK_THROWS_AS(check_level_poset(bad), std::invalid_argument);

  bad = ok;
  bad.chain = {0, 1ull << 2};  // down-set element on a level >= its user
  CHECK_THROWS_AS(check_level_poset(bad), std::invalid_argument);

  // Empty level in the middle of the chain.
  LevelPoset gap{2, {0, 2}, {0, 1ull << 0, 1ull << 0}};
  CHECK_THROWS_AS(check_level_poset(gap), std::invalid_argument);
}

TEST_CASE("isomorphism: relabelings yes, different shapes no") {
  const StrictPoset chain = from_cover_pairs(3, {{0, 1}, {1, 2}});
  const StrictPoset chain_relabeled = from_cover_pairs(3, {{2, 0}, {0, 1}});
  const StrictPoset vee = from_cover_pairs(3, {{0, 1}, {0, 2}});
  CHECK(are_isomorphic(chain, chain_relabeled));
  CHECK_FALSE(are_isomorphic(chain, vee));
  CHECK(are_isomorphic(vee, from_cover_pairs(3, {{1, 0}, {1, 2}})));

  // Same degree profile, different structure: 2+2 vs N-poset.
  const StrictPoset n_poset = from_cover_pairs(4, {{0, 1}, {2, 1}, {2, 3}});
  const StrictPoset two_two = from_cover_pairs(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(are_isomorphic(n_poset, two_two));

  // Equivalence-relation sanity over all 3-element posets.
  const auto all3 = enumerate_strict_posets(3);
  for (const auto& p : all3) CHECK(are_isomorphic(p, p));
  for (const auto& p : all3)
    for (const auto& q : all3) CHECK(are_isomorphic(p, q) == are_isomorphic(q, p));
}

TEST_CASE("labeled enumeration counts") {
  // Labeled strict posets on n elements: OEIS A001035.
  CHECK(enumerate_strict_posets(0).size() == 1);
  CHECK(enumerate_strict_posets(1).size() == 1);
  CHECK(enumerate_strict_posets(2).size() == 3);
  CHECK(enumerate_strict_posets(3).size() == 19);
  CHECK(enumerate_strict_posets(4).size() == 219);
  CHECK(enumerate_strict_posets(5).size() == 4231);
  CHECK_THROWS_AS(enumerate_strict_posets(6), std::invalid_argument);
}

TEST_CASE("poset JSON wire format") {
  using fishburn::json_io::level_poset_to_json;
  using fishburn::json_io::strict_poset_from_json;
  using fishburn::json_io::strict_poset_to_json;

  const StrictPoset p = worked_example();
  const auto j = strict_poset_to_json(p);
  CHECK(j["n"] == 8);
  CHECK(strict_poset_from_json(j) == p);

  const auto lp = std::get<LevelPoset>(down_set_chain(p));
  const auto jl = level_poset_to_json(lp);
  CHECK(jl["levels"][1] == nlohmann::json({4, 5, 6}));
  CHECK(jl["chain"][1] == nlohmann::json({7}));

  CHECK_THROWS_AS(strict_poset_from_json(nlohmann::json{{"n", 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      strict_poset_from_json(nlohmann::json{
          {"n", 2}, {"covers", {{0, 1}, {1, 0}}}}),
      std::invalid_argument);
}
