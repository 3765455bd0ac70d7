#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "fishburn/ascent.hpp"
#include "fishburn/json_io.hpp"

using namespace fishburn::ascent;

namespace {

AscentSequence seq(std::vector<int> e) {
  auto v = validate(std::move(e));
  REQUIRE(std::holds_alternative<AscentSequence>(v));
  return std::get<AscentSequence>(v);
}

}  // namespace

TEST_CASE("asc counts strict rises") {
  CHECK(asc({}) == 0);
  CHECK(asc({0}) == 0);
  CHECK(asc({0, 1, 0, 1, 3, 1, 1, 2}) == 4);
  CHECK(asc({0, 0, 0}) == 0);
  CHECK(asc({0, 1, 2, 3}) == 3);
}

TEST_CASE("validate accepts ascent sequences and rejects with index/reason") {
  CHECK(std::holds_alternative<AscentSequence>(validate({})));
  CHECK(std::holds_alternative<AscentSequence>(validate({0})));
  CHECK(std::holds_alternative<AscentSequence>(validate({0, 1, 0, 1, 3, 1, 1, 2})));

  auto r1 = validate({1, 0});
  REQUIRE(std::holds_alternative<Rejection>(r1));
  CHECK(std::get<Rejection>(r1).index == 1);

  auto r2 = validate({0, 2});
  REQUIRE(std::holds_alternative<Rejection>(r2));
  CHECK(std::get<Rejection>(r2).index == 2);
  CHECK(std::get<Rejection>(r2).reason ==
        "entry exceeds 1 + asc of preceding prefix");

  auto r3 = validate({0, -1});
  REQUIRE(std::holds_alternative<Rejection>(r3));
  CHECK(std::get<Rejection>(r3).reason == "negative entry");

  // 0,1,2 is fine (asc grows as we go) but 0,1,3 overshoots.
  CHECK(std::holds_alternative<AscentSequence>(validate({0, 1, 2})));
  CHECK(std::holds_alternative<Rejection>(validate({0, 1, 3})));
}

TEST_CASE("the five statistics") {
  const StatVector s = stats(seq({0, 1, 0, 1, 3, 1, 1, 2}));
  CHECK(s.length == 8);
  CHECK(s.asc == 4);
  CHECK(s.last == 2);
  CHECK(s.zeros == 2);
  CHECK(s.run == 1);

  CHECK(stats(seq({})) == StatVector{0, 0, 0, 0, 0});
  // All-zero sequences have run 0 by convention (no leftmost nonzero).
  CHECK(stats(seq({0, 0, 0})) == StatVector{3, 0, 0, 3, 0});
  CHECK(stats(seq({0, 0, 1, 0})) == StatVector{4, 1, 0, 3, 2});
  CHECK(stats(seq({0, 1, 2})) == StatVector{3, 2, 2, 1, 1});
}

TEST_CASE("enumeration counts are the Fishburn numbers") {
  const std::vector<std::size_t> expect{1, 1, 2, 5, 15, 53, 217, 1014};
  for (std::size_t n = 0; n < expect.size(); ++n) {
    const auto all = enumerate_ascent_sequences(static_cast<int>(n));
    CHECK(all.size() == expect[n]);
    // lexicographic, duplicate-free, all valid
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& a : all)
      CHECK(std::holds_alternative<AscentSequence>(validate(a.entries)));
  }
}

TEST_CASE("restriction predicate") {
  CHECK(is_restricted(seq({0, 1, 0, 2, 3, 2, 2, 3, 2})));
  CHECK_FALSE(is_restricted(seq({0, 1, 0, 2, 0, 1})));
  CHECK(is_restricted(seq({})));
  CHECK(is_restricted(seq({0, 0, 0})));
  CHECK_FALSE(is_restricted(seq({0, 1, 2, 0})));
  // Witness pair from the length-7 study.
  CHECK(is_restricted(seq({0, 1, 0, 1, 0, 1, 2})));
  CHECK_FALSE(is_restricted(seq({0, 1, 0, 1, 2, 0, 2})));
}

TEST_CASE("enumerate_restricted filters exactly the restricted sequences") {
  for (int n = 0; n <= 8; ++n) {
    const auto direct = enumerate_restricted(n);
    std::vector<AscentSequence> filtered;
    for (const auto& a : enumerate_ascent_sequences(n))
      if (is_restricted(a)) filtered.push_back(a);
    CHECK(direct == filtered);
  }
}

TEST_CASE("rightmost maximum") {
  auto rm = [&](std::vector<int> e) { return rightmost_maximum(seq(std::move(e))); };
  CHECK(!rm({}).has_value());
  CHECK(!rm({0, 0, 0}).has_value());
  CHECK(rm({0, 0, 1, 0, 1, 0, 1, 0, 0, 3}) == std::pair{1, 3});
  CHECK(rm({0, 0, 1, 0, 1, 0, 3, 3, 2, 3, 2, 3, 4}) == std::pair{3, 7});
  CHECK(rm({0, 1, 2, 1, 2}) == std::pair{2, 3});
  CHECK(rm({0, 1}) == std::pair{1, 2});
  CHECK(rm({0, 1, 1}) == std::pair{1, 2});
}

TEST_CASE("glue worked instances") {
  CHECK(glue(seq({0, 1, 0, 2, 1}), seq({0, 1, 2, 1, 2})) ==
        seq({0, 1, 0, 2, 1, 3, 2, 3, 4, 3, 4}));
  CHECK(glue(seq({}), seq({0, 1, 2, 1, 2})) == seq({0, 1, 2, 2, 1, 2}));
  CHECK(glue(seq({}), seq({0, 0})) == seq({0, 0, 0}));
  CHECK(glue(seq({}), seq({})) == seq({0}));
  CHECK(glue(seq({0}), seq({})) == seq({0, 1}));
  CHECK_THROWS_AS(glue(seq({0, 1, 2, 0}), seq({})), std::invalid_argument);
}

TEST_CASE("the printed 19-row decomposition table for n = 3, 4") {
  using Table = std::vector<std::pair<std::vector<int>,
                                      std::pair<std::vector<int>, std::vector<int>>>>;
  const Table table{
      {{0, 0, 0}, {{}, {0, 0}}},
      {{0, 0, 1}, {{0, 0}, {}}},
      {{0, 1, 0}, {{0}, {0}}},
      {{0, 1, 1}, {{}, {0, 1}}},
      {{0, 1, 2}, {{0, 1}, {}}},
      {{0, 0, 0, 0}, {{}, {0, 0, 0}}},
      {{0, 0, 0, 1}, {{0, 0, 0}, {}}},
      {{0, 0, 1, 0}, {{0, 0}, {0}}},
      {{0, 0, 1, 1}, {{}, {0, 0, 1}}},
      {{0, 0, 1, 2}, {{0, 0, 1}, {}}},
      {{0, 1, 0, 0}, {{0}, {0, 0}}},
      {{0, 1, 0, 1}, {{0}, {0, 1}}},
      {{0, 1, 0, 2}, {{0, 1, 0}, {}}},
      {{0, 1, 1, 0}, {{}, {0, 1, 0}}},
      {{0, 1, 1, 1}, {{}, {0, 1, 1}}},
      {{0, 1, 1, 2}, {{0, 1, 1}, {}}},
      {{0, 1, 2, 1}, {{0, 1}, {0}}},
      {{0, 1, 2, 2}, {{}, {0, 1, 2}}},
      {{0, 1, 2, 3}, {{0, 1, 2}, {}}},
  };
  CHECK(table.size() == 19);
  std::set<std::vector<int>> seen;
  for (const auto& [whole, parts] : table) {
    const auto [d1, d2] = split(seq(whole));
    CHECK(d1 == seq(parts.first));
    CHECK(d2 == seq(parts.second));
    CHECK(glue(seq(parts.first), seq(parts.second)) == seq(whole));
    seen.insert(whole);
  }
  // The table covers every restricted sequence of lengths 3 and 4.
  CHECK(enumerate_restricted(3).size() + enumerate_restricted(4).size() ==
        seen.size());
}

TEST_CASE("glue and split are mutually inverse bijections (exhaustive)") {
  std::vector<std::vector<AscentSequence>> restricted;
  for (int n = 0; n <= 9; ++n) restricted.push_back(enumerate_restricted(n));

  for (int n = 1; n <= 9; ++n) {
    std::set<AscentSequence> images;
    for (int k = 0; k + 1 <= n; ++k)
      for (const auto& d1 : restricted[k])
        for (const auto& d2 : restricted[n - 1 - k]) {
          const AscentSequence g = glue(d1, d2);
          CHECK(static_cast<int>(g.entries.size()) == n);
          CHECK(is_restricted(g));
          CHECK(images.insert(g).second);  // injective
          const auto [s1, s2] = split(g);
          CHECK(s1 == d1);
          CHECK(s2 == d2);
        }
    CHECK(images.size() == restricted[n].size());  // surjective
  }
  for (int n = 1; n <= 9; ++n)
    for (const auto& a : restricted[n]) {
      const auto [d1, d2] = split(a);
      CHECK(glue(d1, d2) == a);
    }
}

TEST_CASE("split rejects bad input") {
  CHECK_THROWS_AS(split(seq({})), std::invalid_argument);
  CHECK_THROWS_AS(split(seq({0, 1, 2, 0})), std::invalid_argument);
}

TEST_CASE("sequence JSON") {
  using fishburn::json_io::sequence_from_json;
  using fishburn::json_io::sequence_to_json;
  const auto a = seq({0, 1, 0, 1, 3, 1, 1, 2});
  CHECK(sequence_from_json(sequence_to_json(a)) == a);
  CHECK_THROWS_AS(sequence_from_json(nlohmann::json{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(nlohmann::json{{"a", 1}}), std::invalid_argument);
}
