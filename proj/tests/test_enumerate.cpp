#include <set>

#include "doctest.h"
#include "lehmer/enumerate.hpp"
#include "lehmer/error.hpp"
#include "lehmer/permutation.hpp"

using namespace lehmer;

TEST_CASE("bell and catalan") {
  const std::uint64_t bells[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 0; n <= 10; ++n) CHECK(bell(n) == bells[n]);
  const std::uint64_t catalans[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 0; n <= 9; ++n) CHECK(catalan(n) == catalans[n]);
  CHECK(bell(25) == 4638590332229999353ULL);
  CHECK(catalan(35) == 3116285494907301262ULL);
}

TEST_CASE("overflow is reported") {
  for (int n : {26, 40}) {
    try {
      bell(n);
      FAIL("expected overflow");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::overflow);
    }
  }
  CHECK(catalan(36) == 11959798385860453492ULL);
  CHECK_THROWS_AS(catalan(37), Error);
  CHECK_THROWS_AS(bell(-1), Error);
}

TEST_CASE("lehmer tuples") {
  CHECK(all_lehmer(0).size() == 1);
  CHECK(all_lehmer(3).size() == 6);
  CHECK(all_lehmer(5).size() == 120);
  std::set<PrefTuple> seen;
  for (const auto& a : all_lehmer(4)) {
    CHECK(is_lehmer(a));
    seen.insert(a);
  }
  CHECK(seen.size() == 24);
  for (int n = 0; n <= 9; ++n) CHECK(all_weakly_decreasing_lehmer(n).size() == catalan(n));
}

TEST_CASE("outcome counts") {
  for (int n = 0; n <= 8; ++n) CHECK(count_outcomes(n, 1) == bell(n));
  CHECK(count_outcomes(8, 3) == bell(8));
  CHECK(outcome_set(7, 2) == outcome_set(7, 1));
  CHECK_THROWS_AS(outcome_set(13), Error);
}

TEST_CASE("verification harness") {
  CHECK(theorem_ids().size() == 16);
  for (auto id : theorem_ids()) {
    const auto report = verify(id, 5, 1);
    CHECK_MESSAGE(report.passed(), id);
    CHECK(report.n_max == 5);
    CHECK(report.objects_checked > 0);
  }
  try {
    verify("no-such-check", 3);
    FAIL("expected unknown id");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_theorem);
  }
}
