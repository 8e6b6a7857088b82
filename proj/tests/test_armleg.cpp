#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "lehmer/armleg.hpp"
#include "lehmer/error.hpp"
#include "lehmer/paren.hpp"
#include "lehmer/permutation.hpp"

using namespace lehmer;

namespace {

std::vector<GridPoint> points_of(const PartialArmLegDiagram& t) {
  return {t.points().begin(), t.points().end()};
}

// Geometric crossing test: the arm of (c1, r1) is the horizontal segment from
// column n-r1+1 to c1 at height r1; the leg of (c2, r2) is the vertical segment
// from row n-c2+1 to r2 at column c2.
bool arm_crosses_leg(int n, GridPoint a, GridPoint b) {
  const int arm_left = n - a.row + 1;
  const int leg_bottom = n - b.col + 1;
  return arm_left <= b.col && b.col <= a.col && leg_bottom <= a.row && a.row <= b.row &&
         !(a == b);
}

bool geometric_intersection(const PartialArmLegDiagram& t) {
  for (const auto& a : t.points()) {
    for (const auto& b : t.points()) {
      if (!(a == b) && arm_crosses_leg(t.size(), a, b)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("peaks of the running examples") {
  CHECK(points_of(peaks(Permutation({3, 4, 1, 5, 2, 6}))) == std::vector<GridPoint>{{4, 5}, {5, 2}, {6, 6}});
  CHECK(points_of(peaks(Permutation({5, 2, 4, 3, 1, 6}))) == std::vector<GridPoint>{{3, 4}, {4, 3}, {6, 6}});
  CHECK(points_of(peaks(Permutation(std::vector<int>{}))).empty());
}

TEST_CASE("arms and legs") {
  const auto t = peaks(Permutation({3, 4, 1, 5, 2, 6}));
  CHECK(arms_legs(t) == SpacedParen(6, {1, 2, 5}, {4, 5, 6}));
  CHECK(arms_legs(peaks(Permutation({5, 2, 4, 3, 1, 6}))) == SpacedParen(6, {1, 3, 4}, {3, 4, 6}));
  CHECK_FALSE(is_intersecting(t));
  CHECK(depth_at(t, 3) == 2);
  CHECK(depth_at(t, 6) == 1);
  CHECK_THROWS_AS(depth_at(t, 7), Error);
}

TEST_CASE("diagram validation") {
  CHECK_NOTHROW(PartialArmLegDiagram(3, {{3, 1}}));
  CHECK_THROWS_AS(PartialArmLegDiagram(3, {{1, 1}}), Error);          // below the antidiagonal
  CHECK_THROWS_AS(PartialArmLegDiagram(3, {{2, 3}, {3, 3}}), Error);  // shared row
  CHECK_THROWS_AS(PartialArmLegDiagram(3, {{4, 3}}), Error);
}

TEST_CASE("intersection agrees with segment geometry") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
      const Permutation p(w);
      const auto t = peaks(p);
      CHECK(is_intersecting(t) == geometric_intersection(t));
      CHECK(is_intersecting(t) == contains_armleg_pattern(p));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("peaks from pairs") {
  const auto t = peaks_from_pairs(MatchedPairs({{1, 6}, {2, 4}, {5, 5}}), 6);
  CHECK(points_of(t) == std::vector<GridPoint>{{4, 5}, {5, 2}, {6, 6}});
  CHECK_THROWS_AS(peaks_from_pairs(MatchedPairs({{1, 7}}), 6), Error);
}
