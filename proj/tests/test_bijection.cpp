#include <algorithm>
#include <set>

#include "doctest.h"
#include "lehmer/bijection.hpp"
#include "lehmer/enumerate.hpp"
#include "lehmer/error.hpp"
#include "lehmer/paren.hpp"
#include "lehmer/parking.hpp"

using namespace lehmer;

TEST_CASE("running example 341526") {
  const OutcomePermutation p(Permutation({3, 4, 1, 5, 2, 6}));
  CHECK(phi(p) == SpacedParen(6, {1, 2, 5}, {4, 5, 6}));
  const auto gb = phi_prime(p);
  CHECK(gb.base() == SpacedParen(6, {1, 2, 5}, {4, 5, 6}));
  CHECK(gb.choice_map() == std::map<int, int>{{3, 2}, {4, 1}, {6, 1}});
  CHECK(phi_prime_inv(gb) == p);
  CHECK(outcome_to_partition(p) == SetPartition(6, {{1, 4}, {2, 3, 6}, {5}}));
  CHECK(partition_to_outcome(SetPartition(6, {{1, 4}, {2, 3, 6}, {5}})) == p);
}

TEST_CASE("314526 has different arms and legs") {
  const OutcomePermutation p(Permutation({3, 1, 4, 5, 2, 6}));
  const auto gb = phi_prime(p);
  CHECK(gb.base() == SpacedParen(6, {1, 2, 3, 5}, {3, 4, 5, 6}));
  CHECK(gb.choice_map() == std::map<int, int>{{4, 1}, {6, 1}});
}

TEST_CASE("running example 524316") {
  const OutcomePermutation p(Permutation({5, 2, 4, 3, 1, 6}));
  const auto gb = phi_prime(p);
  CHECK(gb.base() == SpacedParen(6, {1, 3, 4}, {3, 4, 6}));
  CHECK(gb.choice_map() == std::map<int, int>{{2, 1}, {5, 1}, {6, 1}});
  CHECK(phi_prime_inv(gb) == p);
}

TEST_CASE("non-outcomes are rejected") {
  try {
    OutcomePermutation(Permutation({1, 4, 3, 2}));
    FAIL("expected not_an_outcome");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_an_outcome);
  }
}

TEST_CASE("fibers") {
  const SpacedParen sp(6, {1, 2, 5}, {4, 5, 6});
  CHECK(fiber_size(sp) == 4);
  const auto members = fiber(sp);
  CHECK(members.size() == 4);
  CHECK(std::find(members.begin(), members.end(), OutcomePermutation(Permutation({3, 4, 1, 5, 2, 6}))) !=
        members.end());
  for (const auto& p : members) CHECK(phi(p) == sp);

  CHECK(fiber_size(SpacedParen(4, {1, 2}, {3, 4})) == 2);
  CHECK_THROWS_AS(fiber_size(SpacedParen(4, {1, 4}, {2, 4})), Error);
}

TEST_CASE("bijections roundtrip on every outcome") {
  for (int n = 0; n <= 6; ++n) {
    std::set<SetPartition> images;
    for (const auto& p : outcome_set(n, 1)) {
      const auto gb = phi_prime(p);
      CHECK(phi_prime_inv(gb) == p);
      const auto b = outcome_to_partition(p);
      CHECK(partition_to_outcome(b) == p);
      images.insert(b);
    }
    CHECK(images.size() == bell(n));
  }
}
