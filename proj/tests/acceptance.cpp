// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails or overruns its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lehmer/armleg.hpp"
#include "lehmer/bijection.hpp"
#include "lehmer/enumerate.hpp"
#include "lehmer/paren.hpp"
#include "lehmer/parking.hpp"
#include "lehmer/permutation.hpp"
#include "lehmer/setpartition.hpp"

using namespace lehmer;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
};

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::string word(const Permutation& p) {
  std::string s;
  for (int v : p.word()) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

// Every tuple in [n]^n that is weakly decreasing.
void for_each_decreasing_tuple(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> a;
  std::function<void(int)> rec = [&](int bound) {
    if (static_cast<int>(a.size()) == n) {
      visit(a);
      return;
    }
    for (int v = 1; v <= bound; ++v) {
      a.push_back(v);
      rec(v);
      a.pop_back();
    }
  };
  rec(n);
}

long long depth_product(const SpacedParen& sp) {
  long long product = 1;
  int opened = 0;
  int closed_before = 0;
  for (int i = 1; i <= sp.size(); ++i) {
    if (sp.opens_at(i)) ++opened;
    if (!sp.opens_at(i)) product *= opened - closed_before;
    if (sp.closes_at(i)) ++closed_before;
  }
  return product;
}

Outcome bell_counts() {
  Outcome o;
  for (int k = 0; k <= 10; ++k) {
    const auto got = count_outcomes(k, 1);
    o.expect(got == bell(k), "n=" + std::to_string(k) + ": " + std::to_string(got) + " outcomes vs bell " +
                                 std::to_string(bell(k)));
  }
  o.expect(bell(10) == 115975, "bell(10) != 115975");
  o.summary = "count outcomes = B_k for k=0..10, B_10 = " + std::to_string(count_outcomes(10, 1));
  return o;
}

Outcome outcome_characterization() {
  Outcome o;
  std::uint64_t total = 0;
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> parked;
    for_each_lehmer(n, [&](const PrefTuple& a) { parked.insert(park(a).outcome()); });
    std::set<Permutation> avoiders;
    for (const auto& p : all_permutations(n)) {
      if (!contains_armleg_pattern(p)) avoiders.insert(p);
    }
    o.expect(parked == avoiders, "n=" + std::to_string(n) + ": outcome set differs from avoider set");
    std::set<Permutation> library;
    for (const auto& p : outcome_set(n, 1)) library.insert(p.perm());
    o.expect(library == parked, "n=" + std::to_string(n) + ": outcome_set differs from direct parking");
    total += parked.size();
  }
  o.summary = std::to_string(total) + " outcomes compared, n=1..7";
  return o;
}

Outcome bijection_roundtrips() {
  Outcome o;
  std::uint64_t objects = 0;
  std::size_t partitions_at_8 = 0;
  for (int n = 0; n <= 8; ++n) {
    const auto outcomes = outcome_set(n, 1);
    std::set<GBsp> images;
    for (const auto& p : outcomes) {
      const auto gb = phi_prime(p);
      images.insert(gb);
      o.expect(phi_prime_inv(gb) == p, "phi' inverse fails on " + word(p.perm()));
      o.expect(partition_to_outcome(outcome_to_partition(p)) == p, "composite fails on " + word(p.perm()));
    }
    const auto gbsps = enumerate_gbsps(n);
    o.expect(images == std::set<GBsp>(gbsps.begin(), gbsps.end()), "phi' image is not every gBSP at n=" +
                                                                        std::to_string(n));
    for (const auto& gb : gbsps) {
      o.expect(phi_prime(phi_prime_inv(gb)) == gb, "phi' fails on " + render(gb));
      o.expect(to_gbsp(from_gbsp(gb)) == gb, "psi' fails on " + render(gb));
    }
    const auto partitions = enumerate_partitions(n);
    for (const auto& b : partitions) {
      o.expect(from_gbsp(to_gbsp(b)) == b, "psi' inverse fails on " + render(b));
      o.expect(outcome_to_partition(partition_to_outcome(b)) == b, "composite fails on " + render(b));
    }
    if (n == 8) partitions_at_8 = partitions.size();
    objects += outcomes.size() + gbsps.size() + partitions.size();
  }
  o.expect(partitions_at_8 == 4140, "expected 4140 partitions at n=8");
  o.summary = std::to_string(objects) + " objects, " + std::to_string(partitions_at_8) + " partitions at n=8";
  return o;
}

Outcome fiber_formula() {
  Outcome o;
  std::uint64_t shapes = 0;
  for (int n = 0; n <= 7; ++n) {
    std::map<SpacedParen, long long> phi_fibers;
    for (const auto& p : all_permutations(n)) {
      if (!contains_armleg_pattern(p)) ++phi_fibers[phi(OutcomePermutation(p))];
    }
    std::map<SpacedParen, long long> psi_fibers;
    for_each_partition(n, [&](const SetPartition& b) { ++psi_fibers[min_max(b)]; });
    for_each_bsp(n, [&](const SpacedParen& sp) {
      ++shapes;
      const long long expected = depth_product(sp);
      o.expect(phi_fibers[sp] == expected, "phi fiber of " + render(sp));
      o.expect(psi_fibers[sp] == expected, "psi fiber of " + render(sp));
      o.expect(fiber_size(sp) == expected, "fiber_size of " + render(sp));
    });
  }
  const SpacedParen example(6, {1, 2, 5}, {4, 5, 6});
  o.expect(fiber_size(example) == 4 && fiber(example).size() == 4, "fiber of ({1,2,5},{4,5,6}) is not 4");
  o.summary = std::to_string(shapes) + " balanced shapes, n<=7; ({1,2,5},{4,5,6}) -> 4";
  return o;
}

Outcome catalan_results() {
  Outcome o;
  for (int n = 1; n <= 9; ++n) {
    const auto tag = "n=" + std::to_string(n) + ": ";
    const auto decreasing_lehmer = all_weakly_decreasing_lehmer(n);
    const std::set<PrefTuple> it(decreasing_lehmer.begin(), decreasing_lehmer.end());
    o.expect(it.size() == catalan(n), tag + "|IT_n decreasing| != C_n");

    std::set<PrefTuple> pf;
    for_each_decreasing_tuple(n, [&](const std::vector<int>& a) {
      const PrefTuple t(a);
      if (park(t).parked()) pf.insert(t);
    });
    o.expect(it == pf, tag + "decreasing Lehmer tuples differ from decreasing parking functions");

    std::set<Permutation> image;
    for (const auto& a : it) {
      o.expect(is_lehmer(a) && is_weakly_decreasing(a), tag + "generator produced a bad tuple");
      image.insert(park(a).outcome());
    }
    o.expect(image.size() == it.size(), tag + "park is not injective");

    std::set<Permutation> avoiders;
    for (const auto& p : all_permutations(n)) {
      if (!contains_pattern_132(p)) avoiders.insert(p);
    }
    o.expect(image == avoiders, tag + "image differs from Av_n(132)");
  }
  o.summary = "n=1..9, C_9 = " + std::to_string(all_weakly_decreasing_lehmer(9).size());
  return o;
}

Outcome worked_examples() {
  Outcome o;
  o.expect(park(PrefTuple({5, 2, 4, 2, 1, 1})).outcome() == Permutation({5, 2, 4, 3, 1, 6}),
           "park(5,2,4,2,1,1) != 524316");
  o.expect(park(PrefTuple({2, 2, 1})).outcome() == Permutation({3, 1, 2}), "park(2,2,1) != 312");
  o.expect(inversion_table(Permutation({5, 2, 4, 6, 1, 3})) == InversionTable({4, 1, 3, 1, 0, 0}),
           "inversion_table(524613) != (4,1,3,1,0,0)");
  const SpacedParen sp(7, {1, 3, 5}, {5, 6, 7});
  o.expect(depths(sp) == std::vector<int>{1, 1, 2, 2, 3, 2, 1}, "depth vector");
  const auto pairs = matching_pairs(sp);
  o.expect(std::vector<MatchedPair>(pairs.pairs().begin(), pairs.pairs().end()) ==
               std::vector<MatchedPair>{{1, 7}, {3, 6}, {5, 5}},
           "matching pairs");
  const OutcomePermutation p(Permutation({3, 4, 1, 5, 2, 6}));
  const auto gb = phi_prime(p);
  o.expect(gb.base() == SpacedParen(6, {1, 2, 5}, {4, 5, 6}), "phi'(341526) arms/legs");
  o.expect(gb.choice_map() == std::map<int, int>{{3, 2}, {4, 1}, {6, 1}}, "phi'(341526) choices");
  const SetPartition b(6, {{1, 4}, {2, 3, 6}, {5}});
  o.expect(from_gbsp(gb) == b, "psi'^-1 of the gBSP");
  o.expect(to_gbsp(b) == gb, "psi' of {1,4}|{2,3,6}|{5}");
  o.expect(phi_prime_inv(gb) == p, "phi'^-1 of the gBSP");
  o.summary = "524316, 312, (4,1,3,1,0,0), depths, pairs, 341526 <-> gBSP <-> {1,4}|{2,3,6}|{5}";
  return o;
}

Outcome inversion_tables() {
  Outcome o;
  const auto s7 = all_permutations(7);
  for (const auto& p : s7) o.expect(from_inversion_table(inversion_table(p)) == p, "roundtrip fails on " + word(p));
  for (int n = 0; n <= 7; ++n) {
    std::set<PrefTuple> shifted;
    for (const auto& p : all_permutations(n)) shifted.insert(lehmer_from_inversion_table(inversion_table(p)));
    // Every tuple with 1 <= a_i <= n-i+1, built directly from the bounds.
    std::set<PrefTuple> bounded;
    std::vector<int> a(static_cast<std::size_t>(n), 1);
    while (true) {
      bounded.insert(PrefTuple(a));
      int i = n - 1;
      while (i >= 0 && a[static_cast<std::size_t>(i)] == n - i) a[static_cast<std::size_t>(i--)] = 1;
      if (i < 0) break;
      ++a[static_cast<std::size_t>(i)];
    }
    o.expect(shifted == bounded, "n=" + std::to_string(n) + ": shifted tables differ from Lehmer tuples");
    o.expect(bounded.size() == s7.size() || n != 7, "n=7 count");
  }
  o.summary = std::to_string(s7.size()) + " roundtrips over S_7; shift is onto Lehmer tuples for n=0..7";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "Bell-number outcome counts", 60, bell_counts},
      {2, "outcome characterization", 30, outcome_characterization},
      {3, "bijection roundtrips", 60, bijection_roundtrips},
      {4, "fiber formula", 60, fiber_formula},
      {5, "Catalan results", 30, catalan_results},
      {6, "worked-example regressions", 5, worked_examples},
      {7, "inversion-table bijection", 5, inversion_tables},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds <= c.budget_seconds;
    const bool ok = o.failures.empty() && in_budget;
    failed += ok ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", c.id, c.name, o.summary.c_str(),
                seconds, c.budget_seconds);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    if (!in_budget) std::printf("    over time budget\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
