#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "lehmer/enumerate.hpp"
#include "lehmer/error.hpp"
#include "lehmer/permutation.hpp"

using namespace lehmer;

namespace {

std::vector<Permutation> all_of_size(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::parse_error;
}

}  // namespace

TEST_CASE("permutation validation") {
  CHECK_NOTHROW(Permutation(std::vector<int>{}));
  CHECK_NOTHROW(Permutation({2, 1, 3}));
  CHECK(code_of([] { Permutation({1, 1, 3}); }) == ErrorCode::invalid_permutation);
  CHECK(code_of([] { Permutation({0, 1, 2}); }) == ErrorCode::invalid_permutation);
  CHECK(code_of([] { Permutation({1, 2, 4}); }) == ErrorCode::invalid_permutation);
  CHECK(Permutation::identity(4) == Permutation({1, 2, 3, 4}));
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation({5, 2, 4, 3, 1, 6})) == Permutation({5, 2, 4, 3, 1, 6}));
  CHECK(inverse(Permutation({2, 3, 1})) == Permutation({3, 1, 2}));
  for (const auto& p : all_of_size(5)) CHECK(inverse(inverse(p)) == p);
}

TEST_CASE("inversion table is indexed by value") {
  CHECK(inversion_table(Permutation({5, 2, 4, 6, 1, 3})) == InversionTable({4, 1, 3, 1, 0, 0}));
  CHECK(inversion_table(Permutation({3, 2, 1})) == InversionTable({2, 1, 0}));
  CHECK(inversion_table(Permutation::identity(4)) == InversionTable({0, 0, 0, 0}));
  CHECK(from_inversion_table(InversionTable({4, 1, 3, 1, 0, 0})) == Permutation({5, 2, 4, 6, 1, 3}));
}

TEST_CASE("inversion table bounds") {
  CHECK_NOTHROW(InversionTable({2, 1, 0}));
  CHECK(code_of([] { InversionTable({3, 0, 0}); }) == ErrorCode::invalid_inversion_table);
  CHECK(code_of([] { InversionTable({0, 0, 1}); }) == ErrorCode::invalid_inversion_table);
  CHECK(code_of([] { InversionTable({-1, 0}); }) == ErrorCode::invalid_inversion_table);
}

TEST_CASE("inversion table roundtrip over S_n") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : all_of_size(n)) CHECK(from_inversion_table(inversion_table(p)) == p);
  }
}

TEST_CASE("132 avoiders are counted by Catalan numbers") {
  CHECK(contains_pattern_132(Permutation({1, 3, 2})));
  CHECK(contains_pattern_132(Permutation({2, 1, 4, 3})));
  CHECK_FALSE(contains_pattern_132(Permutation({3, 1, 2})));
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t avoiders = 0;
    for (const auto& p : all_of_size(n)) avoiders += contains_pattern_132(p) ? 0 : 1;
    CHECK(avoiders == catalan(n));
  }
}

TEST_CASE("arm-leg pattern") {
  // i=2, j=3: n-i+1 = 3 <= pi_3 = 3 < pi_2 = 4
  CHECK(contains_armleg_pattern(Permutation({1, 4, 3, 2})));
  CHECK_FALSE(contains_armleg_pattern(Permutation({3, 4, 1, 5, 2, 6})));
  CHECK_FALSE(contains_armleg_pattern(Permutation({5, 2, 4, 3, 1, 6})));
  CHECK_FALSE(contains_armleg_pattern(Permutation::identity(7)));

  const std::uint64_t expected[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t avoiders = 0;
    for (const auto& p : all_of_size(n)) avoiders += contains_armleg_pattern(p) ? 0 : 1;
    CHECK(avoiders == expected[n]);
  }
}
