#include <set>

#include "doctest.h"
#include "lehmer/enumerate.hpp"
#include "lehmer/error.hpp"
#include "lehmer/paren.hpp"
#include "lehmer/setpartition.hpp"

using namespace lehmer;

TEST_CASE("canonical form") {
  const SetPartition b(6, {{5}, {6, 2, 3}, {4, 1}});
  CHECK(b == SetPartition(6, {{1, 4}, {2, 3, 6}, {5}}));
  CHECK(render(b) == "{1,4}|{2,3,6}|{5}");
  CHECK(b.block_count() == 3);
  CHECK(render(SetPartition(0, {})) == "");
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}}), Error);
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(SetPartition(3, {{1, 2}, {}, {3}}), Error);
  CHECK_THROWS_AS(SetPartition(2, {{1, 2, 3}}), Error);
}

TEST_CASE("parse") {
  CHECK(parse_set_partition("{1,4}|{2,3,6}|{5}") == SetPartition(6, {{1, 4}, {2, 3, 6}, {5}}));
  CHECK(parse_set_partition("{2}|{1}") == SetPartition(2, {{1}, {2}}));
  CHECK_THROWS_AS(parse_set_partition("{1,4}|{2"), Error);
  CHECK_THROWS_AS(parse_set_partition("{1,3}"), Error);
}

TEST_CASE("min-max parenthesization and gbsp") {
  const SetPartition b(6, {{1, 4}, {2, 3, 6}, {5}});
  CHECK(min_max(b) == SpacedParen(6, {1, 2, 5}, {4, 5, 6}));
  const auto gb = to_gbsp(b);
  CHECK(gb.choice_map() == std::map<int, int>{{3, 2}, {4, 1}, {6, 1}});
  CHECK(from_gbsp(gb) == b);
}

TEST_CASE("enumeration matches Bell numbers and roundtrips") {
  for (int n = 0; n <= 8; ++n) {
    std::set<SetPartition> seen;
    for_each_partition(n, [&](const SetPartition& b) {
      CHECK(is_balanced(min_max(b)));
      CHECK(from_gbsp(to_gbsp(b)) == b);
      seen.insert(b);
    });
    CHECK(seen.size() == bell(n));
  }
}

TEST_CASE("partition fiber") {
  const SpacedParen sp(4, {1, 2}, {3, 4});
  std::set<SetPartition> fiber;
  for (const auto& b : enumerate_partitions(4)) {
    if (min_max(b) == sp) fiber.insert(b);
  }
  CHECK(fiber == std::set<SetPartition>{SetPartition(4, {{1, 3}, {2, 4}}), SetPartition(4, {{1, 4}, {2, 3}})});
}
