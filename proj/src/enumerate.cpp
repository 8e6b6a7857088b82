#include "lehmer/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "lehmer/armleg.hpp"
#include "lehmer/error.hpp"
#include "lehmer/paren.hpp"
#include "lehmer/setpartition.hpp"

namespace lehmer {

namespace {

constexpr int kMaxOutcomeN = 12;

// Advances prefs[from..n-1] as an odometer with prefs[i] in [1, n-i]
// (0-based i). Returns false once every tuple has been produced.
bool next_lehmer(std::vector<int>& prefs, std::size_t from) {
  const auto n = prefs.size();
  for (auto i = n; i > from; --i) {
    const auto idx = i - 1;
    if (prefs[idx] < static_cast<int>(n - idx)) {
      ++prefs[idx];
      return true;
    }
    prefs[idx] = 1;
  }
  return false;
}

// 4 bits per entry; n <= 12 keeps the key within 48 bits.
std::uint64_t pack(std::span<const int> word) {
  std::uint64_t key = 0;
  for (int v : word) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

std::vector<int> unpack(std::uint64_t key, int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    word[static_cast<std::size_t>(i)] = static_cast<int>(key & 0xF) + 1;
    key >>= 4;
  }
  return word;
}

std::unordered_set<std::uint64_t> outcome_keys(int n, unsigned threads) {
  if (n < 0 || n > kMaxOutcomeN) {
    throw Error(ErrorCode::index_out_of_range,
                "outcome enumeration supports 0 <= n <= " + std::to_string(kMaxOutcomeN), n);
  }
  std::unordered_set<std::uint64_t> merged;
  if (n == 0) {
    merged.insert(0);
    return merged;
  }
  if (threads == 0) threads = default_thread_count();
  threads = std::clamp(threads, 1u, static_cast<unsigned>(n));

  std::atomic<int> next_first{1};
  std::mutex merge_mutex;
  auto worker = [&] {
    std::unordered_set<std::uint64_t> local;
    std::vector<int> prefs(static_cast<std::size_t>(n), 1);
    std::vector<int> spots(static_cast<std::size_t>(n));
    for (int first = next_first++; first <= n; first = next_first++) {
      std::fill(prefs.begin(), prefs.end(), 1);
      prefs[0] = first;
      do {
        [[maybe_unused]] const int failed = detail::park_into(prefs, spots);
        local.insert(pack(spots));
      } while (next_lehmer(prefs, 1));
    }
    std::lock_guard lock(merge_mutex);
    merged.merge(local);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return merged;
}

std::string str(std::span<const int> values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

std::string str(const SpacedParen& sp) { return "F={" + str(sp.opens()) + "} L={" + str(sp.closes()) + "}"; }

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("LEHMER_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_lehmer(int n, const std::function<void(const PrefTuple&)>& visit) {
  std::vector<int> prefs(static_cast<std::size_t>(std::max(n, 0)), 1);
  do {
    visit(PrefTuple(prefs));
  } while (next_lehmer(prefs, 0));
}

std::vector<PrefTuple> all_lehmer(int n) {
  std::vector<PrefTuple> out;
  for_each_lehmer(n, [&](const PrefTuple& a) { out.push_back(a); });
  return out;
}

std::vector<PrefTuple> all_weakly_decreasing_lehmer(int n) {
  std::vector<PrefTuple> out;
  std::vector<int> prefs;
  // Position i (1-based) takes values in [1, min(previous, n-i+1)].
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i > n) {
      out.emplace_back(prefs);
      return;
    }
    for (int v = 1; v <= std::min(cap, n - i + 1); ++v) {
      prefs.push_back(v);
      self(self, i + 1, v);
      prefs.pop_back();
    }
  };
  rec(rec, 1, n);
  return out;
}

std::vector<OutcomePermutation> outcome_set(int n, unsigned threads) {
  const auto keys = outcome_keys(n, threads);
  std::vector<std::uint64_t> sorted(keys.begin(), keys.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<OutcomePermutation> out;
  out.reserve(sorted.size());
  for (auto key : sorted) out.emplace_back(Permutation(unpack(key, n)));
  return out;
}

std::uint64_t count_outcomes(int n, unsigned threads) { return outcome_keys(n, threads).size(); }

std::uint64_t bell(int n) {
  if (n < 0) throw Error(ErrorCode::index_out_of_range, "bell(n) needs n >= 0", n);
  // Row k of the triangle runs from B_k to B_{k+1}; B_n heads row n.
  std::vector<std::uint64_t> row{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> next{row.back()};
    if (k == n) return next.front();
    for (auto v : row) {
      std::uint64_t sum = 0;
      if (__builtin_add_overflow(next.back(), v, &sum)) {
        throw Error(ErrorCode::overflow, "bell(" + std::to_string(n) + ") exceeds 64 bits", n);
      }
      next.push_back(sum);
    }
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t catalan(int n) {
  if (n < 0) throw Error(ErrorCode::index_out_of_range, "catalan(n) needs n >= 0", n);
  std::vector<std::uint64_t> c{1};
  for (int m = 0; m < n; ++m) {
    std::uint64_t total = 0;
    for (int k = 0; k <= m; ++k) {
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(c[static_cast<std::size_t>(k)], c[static_cast<std::size_t>(m - k)], &term) ||
          __builtin_add_overflow(total, term, &total)) {
        throw Error(ErrorCode::overflow, "catalan(" + std::to_string(n) + ") exceeds 64 bits", n);
      }
    }
    c.push_back(total);
  }
  return c.back();
}

// ---------------------------------------------------------------------------
// Verification suite. Each check runs one size n and appends to the report.

namespace {

constexpr std::size_t kMaxListedDiscrepancies = 50;

struct Check {
  VerificationReport& report;
  int n;
  unsigned threads;
  std::size_t& total_failures;

  void fail(const std::string& what) {
    ++total_failures;
    if (report.discrepancies.size() < kMaxListedDiscrepancies) {
      report.discrepancies.push_back("n=" + std::to_string(n) + ": " + what);
    }
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void detail(const std::string& line) { report.details.push_back("n=" + std::to_string(n) + ": " + line); }
};

// Oracle side: plain next_permutation sweep, independent of the parking code.
std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Oracle side: product of depths over unopened spaces, straight from the
// depth formula.
long long depth_product(const SpacedParen& sp) {
  long long product = 1;
  for (int i = 1; i <= sp.size(); ++i) {
    if (sp.opens_at(i)) continue;
    int opened = 0;
    int closed = 0;
    for (int f : sp.opens()) opened += f <= i;
    for (int l : sp.closes()) closed += l <= i - 1;
    product *= opened - closed;
  }
  return product;
}

std::set<SpacedParen> bsp_set(int n) {
  const auto v = enumerate_bsps(n);
  return {v.begin(), v.end()};
}

void check_lehmer_subset_pf(Check& c) {
  std::uint64_t lehmer_count = 0;
  for_each_lehmer(c.n, [&](const PrefTuple& a) {
    ++lehmer_count;
    c.expect(is_lehmer(a), "generated non-Lehmer tuple (" + str(a.prefs()) + ")");
    c.expect(is_parking_function(a), "Lehmer tuple (" + str(a.prefs()) + ") fails the sorted test");
    c.expect(park(a).parked(), "Lehmer tuple (" + str(a.prefs()) + ") fails to park");
  });
  c.report.objects_checked += lehmer_count;
  std::uint64_t factorial = 1;
  for (int k = 2; k <= c.n; ++k) factorial *= static_cast<std::uint64_t>(k);
  c.expect(lehmer_count == factorial, "generated " + std::to_string(lehmer_count) +
                                          " Lehmer tuples, expected n! = " + std::to_string(factorial));

  // Sorted characterization vs simulation over all of [n]^n.
  std::uint64_t all_count = 0;
  if (c.n <= 7) {
    std::vector<int> a(static_cast<std::size_t>(c.n), 1);
    while (true) {
      ++all_count;
      const PrefTuple t(a);
      c.expect(is_parking_function(t) == park(t).parked(),
               "sorted test and simulation disagree on (" + str(a) + ")");
      auto k = a.size();
      while (k > 0 && a[k - 1] == c.n) a[--k] = 1;
      if (k == 0) break;
      ++a[k - 1];
    }
    c.report.objects_checked += all_count;
  }
  c.detail(std::to_string(lehmer_count) + " Lehmer tuples park; " + std::to_string(all_count) +
           " tuples of [n]^n cross-checked");
}

void check_outcome_characterization(Check& c) {
  std::set<Permutation> parked;
  for_each_lehmer(c.n, [&](const PrefTuple& a) {
    const auto result = park(a);
    if (result.parked()) parked.insert(result.outcome());
  });
  std::set<Permutation> avoiders;
  for (const auto& p : all_permutations(c.n)) {
    if (!contains_armleg_pattern(p)) avoiders.insert(p);
  }
  for (const auto& p : parked) {
    c.expect(avoiders.count(p) == 1, "outcome " + str(p.word()) + " contains the arm-leg pattern");
  }
  for (const auto& p : avoiders) {
    if (parked.count(p) == 0) c.fail("avoider " + str(p.word()) + " is not a parked outcome");
    const PrefTuple pre = canonical_lehmer_preimage(p);
    const auto result = park(pre);
    c.expect(is_lehmer(pre) && result.parked() && result.outcome() == p,
             "canonical preimage (" + str(pre.prefs()) + ") does not park to " + str(p.word()));
  }
  c.report.objects_checked += parked.size() + avoiders.size();
  c.detail(std::to_string(parked.size()) + " outcomes, " + std::to_string(avoiders.size()) + " avoiders");
}

void check_depth_box_count(Check& c) {
  for (const auto& op : outcome_set(c.n, c.threads)) {
    const auto tau = peaks(op.perm());
    const auto sp = arms_legs(tau);
    for (int i = 1; i <= c.n; ++i) {
      c.expect(depth_at(tau, i) == depth(sp, i),
               str(op.perm().word()) + ": box count and depth differ at space " + std::to_string(i));
    }
    ++c.report.objects_checked;
  }
}

void check_arms_legs_balanced(Check& c) {
  std::uint64_t checked = 0;
  for (const auto& op : outcome_set(c.n, c.threads)) {
    const auto sp = phi(op);
    c.expect(is_balanced(sp), str(op.perm().word()) + " gives unbalanced " + str(sp));
    if (c.n >= 1) {
      c.expect(sp.opens_at(1) && sp.closes_at(c.n), str(op.perm().word()) + ": 1 not in F or n not in L");
    }
    ++checked;
  }
  c.report.objects_checked += checked;
  c.detail(std::to_string(checked) + " outcomes give balanced parenthesizations");
}

// All partial arm-leg diagrams: each column takes no point or an unused row
// at or above the antidiagonal.
void for_each_partial_diagram(int n, const std::function<void(const PartialArmLegDiagram&)>& visit) {
  std::vector<GridPoint> points;
  std::vector<bool> row_used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int col) -> void {
    if (col > n) {
      visit(PartialArmLegDiagram(n, points));
      return;
    }
    self(self, col + 1);
    for (int row = n - col + 1; row <= n; ++row) {
      if (row_used[static_cast<std::size_t>(row)]) continue;
      row_used[static_cast<std::size_t>(row)] = true;
      points.push_back({col, row});
      self(self, col + 1);
      points.pop_back();
      row_used[static_cast<std::size_t>(row)] = false;
    }
  };
  rec(rec, 1);
}

void check_peaks_from_pairs_unique(Check& c) {
  std::map<SpacedParen, std::vector<PartialArmLegDiagram>> by_arms_legs;
  std::uint64_t diagrams = 0;
  for_each_partial_diagram(c.n, [&](const PartialArmLegDiagram& t) {
    ++diagrams;
    if (!is_intersecting(t)) by_arms_legs[arms_legs(t)].push_back(t);
  });
  std::uint64_t bsps = 0;
  for_each_bsp(c.n, [&](const SpacedParen& sp) {
    ++bsps;
    const auto tau = peaks_from_pairs(matching_pairs(sp), c.n);
    c.expect(!is_intersecting(tau), "peaks from " + str(sp) + " intersect");
    c.expect(arms_legs(tau) == sp, "peaks from " + str(sp) + " do not reproduce it");
    c.expect(static_cast<int>(tau.points().size()) == sp.pair_count(), "wrong number of peaks for " + str(sp));
    const auto it = by_arms_legs.find(sp);
    if (it == by_arms_legs.end()) {
      c.fail("no non-intersecting diagram has arms/legs " + str(sp));
    } else {
      c.expect(it->second.size() == 1 && it->second.front() == tau,
               std::to_string(it->second.size()) + " non-intersecting diagrams have arms/legs " + str(sp));
    }
  });
  c.report.objects_checked += diagrams + bsps;
  c.detail(std::to_string(bsps) + " BSPs, " + std::to_string(diagrams) + " partial diagrams searched");
}

void check_phi_surjective(Check& c) {
  std::set<SpacedParen> image;
  for (const auto& op : outcome_set(c.n, c.threads)) image.insert(phi(op));
  const auto all = bsp_set(c.n);
  c.expect(image == all, "phi image has " + std::to_string(image.size()) + " elements, " +
                             std::to_string(all.size()) + " BSPs exist");
  for (const auto& sp : all) {
    std::vector<int> ones(static_cast<std::size_t>(sp.size()), 0);
    for (int i = 1; i <= sp.size(); ++i) {
      if (!sp.opens_at(i)) ones[static_cast<std::size_t>(i - 1)] = 1;
    }
    const auto op = phi_prime_inv(GBsp(sp, ones));
    c.expect(phi(op) == sp, "constructed outcome " + str(op.perm().word()) + " misses " + str(sp));
  }
  c.report.objects_checked += all.size();
  c.detail(std::to_string(all.size()) + " BSPs all hit");
}

void check_outcome_fiber_size(Check& c) {
  std::map<SpacedParen, long long> counts;
  for (const auto& op : outcome_set(c.n, c.threads)) ++counts[phi(op)];
  for (const auto& sp : bsp_set(c.n)) {
    const long long expected = depth_product(sp);
    const long long raw = counts.count(sp) ? counts[sp] : 0;
    c.expect(raw == expected, str(sp) + ": raw fiber " + std::to_string(raw) + ", product " +
                                  std::to_string(expected));
    c.expect(fiber_size(sp) == expected, str(sp) + ": fiber_size disagrees with the product");
    std::set<OutcomePermutation> streamed;
    for_each_in_fiber(sp, [&](const OutcomePermutation& op) {
      c.expect(phi(op) == sp, str(op.perm().word()) + " streamed in the wrong fiber");
      streamed.insert(op);
    });
    c.expect(static_cast<long long>(streamed.size()) == expected,
             str(sp) + ": fiber stream yields " + std::to_string(streamed.size()) + " distinct outcomes");
    ++c.report.objects_checked;
  }
  c.detail(std::to_string(counts.size()) + " fibers match the depth product");
}

void check_outcome_gbsp_bijection(Check& c) {
  const auto outcomes = outcome_set(c.n, c.threads);
  std::set<GBsp> images;
  for (const auto& op : outcomes) {
    const auto gb = phi_prime(op);
    images.insert(gb);
    c.expect(phi_prime_inv(gb) == op, "phi_prime_inv(phi_prime(" + str(op.perm().word()) + ")) differs");
  }
  c.expect(images.size() == outcomes.size(), "phi_prime is not injective");
  std::uint64_t gbsps = 0;
  for_each_gbsp(c.n, [&](const GBsp& gb) {
    ++gbsps;
    c.expect(phi_prime(phi_prime_inv(gb)) == gb, "phi_prime(phi_prime_inv(" + render(gb) + ")) differs");
  });
  c.expect(gbsps == outcomes.size(), std::to_string(gbsps) + " gBSPs vs " + std::to_string(outcomes.size()) +
                                         " outcomes");
  c.report.objects_checked += outcomes.size() + gbsps;
  c.detail(std::to_string(outcomes.size()) + " outcomes <-> " + std::to_string(gbsps) + " gBSPs");
}

void check_minmax_balanced(Check& c) {
  std::uint64_t count = 0;
  for_each_partition(c.n, [&](const SetPartition& b) {
    ++count;
    c.expect(is_balanced(min_max(b)), render(b) + " gives an unbalanced parenthesization");
  });
  c.report.objects_checked += count;
  c.detail(std::to_string(count) + " partitions");
}

void check_minmax_surjective(Check& c) {
  std::set<SpacedParen> image;
  for_each_partition(c.n, [&](const SetPartition& b) { image.insert(min_max(b)); });
  const auto all = bsp_set(c.n);
  c.expect(image == all, "min/max image has " + std::to_string(image.size()) + " elements, " +
                             std::to_string(all.size()) + " BSPs exist");
  c.report.objects_checked += all.size();
  c.detail(std::to_string(all.size()) + " BSPs all hit");
}

void check_partition_fiber_size(Check& c) {
  std::map<SpacedParen, long long> counts;
  for_each_partition(c.n, [&](const SetPartition& b) { ++counts[min_max(b)]; });
  for (const auto& sp : bsp_set(c.n)) {
    const long long expected = depth_product(sp);
    const long long raw = counts.count(sp) ? counts[sp] : 0;
    c.expect(raw == expected, str(sp) + ": raw fiber " + std::to_string(raw) + ", product " +
                                  std::to_string(expected));
    ++c.report.objects_checked;
  }
  c.detail(std::to_string(counts.size()) + " fibers match the depth product");
}

void check_partition_gbsp_bijection(Check& c) {
  std::uint64_t partitions = 0;
  std::set<GBsp> images;
  for_each_partition(c.n, [&](const SetPartition& b) {
    ++partitions;
    const auto gb = to_gbsp(b);
    images.insert(gb);
    c.expect(from_gbsp(gb) == b, "from_gbsp(to_gbsp(" + render(b) + ")) differs");
  });
  std::uint64_t gbsps = 0;
  for_each_gbsp(c.n, [&](const GBsp& gb) {
    ++gbsps;
    c.expect(to_gbsp(from_gbsp(gb)) == gb, "to_gbsp(from_gbsp(" + render(gb) + ")) differs");
  });
  c.expect(images.size() == partitions, "to_gbsp is not injective");
  c.expect(partitions == bell(c.n) && gbsps == bell(c.n),
           std::to_string(partitions) + " partitions, " + std::to_string(gbsps) + " gBSPs, B_n = " +
               std::to_string(bell(c.n)));
  c.report.objects_checked += partitions + gbsps;
  c.detail(std::to_string(partitions) + " partitions <-> " + std::to_string(gbsps) + " gBSPs");
}

void check_outcome_partition_bijection(Check& c) {
  const auto outcomes = outcome_set(c.n, c.threads);
  std::set<SetPartition> image;
  for (const auto& op : outcomes) {
    const auto b = outcome_to_partition(op);
    image.insert(b);
    c.expect(partition_to_outcome(b) == op, str(op.perm().word()) + " does not round-trip through " + render(b));
  }
  std::uint64_t partitions = 0;
  for_each_partition(c.n, [&](const SetPartition& b) {
    ++partitions;
    c.expect(outcome_to_partition(partition_to_outcome(b)) == b, render(b) + " does not round-trip");
    c.expect(image.count(b) == 1, render(b) + " is not hit by any outcome");
  });
  const auto expected = bell(c.n);
  c.expect(outcomes.size() == expected && partitions == expected,
           std::to_string(outcomes.size()) + " outcomes, " + std::to_string(partitions) + " partitions, B_n = " +
               std::to_string(expected));
  c.report.objects_checked += outcomes.size() + partitions;
  c.detail(std::to_string(partitions) + " partitions <-> " + std::to_string(outcomes.size()) + " outcomes");
}

void check_decreasing_avoids_132(Check& c) {
  const auto tuples = all_weakly_decreasing_lehmer(c.n);
  for (const auto& a : tuples) {
    const auto result = park(a);
    if (!result.parked()) {
      c.fail("(" + str(a.prefs()) + ") fails to park");
      continue;
    }
    c.expect(!contains_pattern_132(result.outcome()),
             "(" + str(a.prefs()) + ") parks to " + str(result.outcome().word()) + ", which contains 132");
  }
  c.report.objects_checked += tuples.size();
  c.detail(std::to_string(tuples.size()) + " weakly decreasing Lehmer tuples");
}

void check_decreasing_park_injective(Check& c) {
  const auto tuples = all_weakly_decreasing_lehmer(c.n);
  std::map<Permutation, PrefTuple> seen;
  for (const auto& a : tuples) {
    const auto result = park(a);
    if (!result.parked()) {
      c.fail("(" + str(a.prefs()) + ") fails to park");
      continue;
    }
    const auto [it, fresh] = seen.emplace(result.outcome(), a);
    c.expect(fresh, "(" + str(a.prefs()) + ") and (" + str(it->second.prefs()) + ") both park to " +
                        str(result.outcome().word()));
  }
  c.report.objects_checked += tuples.size();
  c.detail(std::to_string(seen.size()) + " distinct outcomes from " + std::to_string(tuples.size()) + " tuples");
}

void check_decreasing_outcomes_catalan(Check& c) {
  const auto expected = catalan(c.n);
  const auto lehmer_dec = all_weakly_decreasing_lehmer(c.n);
  c.expect(lehmer_dec.size() == expected,
           std::to_string(lehmer_dec.size()) + " weakly decreasing Lehmer tuples, C_n = " + std::to_string(expected));

  // Weakly decreasing parking functions, found among all weakly decreasing
  // tuples of [n]^n.
  std::set<PrefTuple> pf_dec;
  std::vector<int> a;
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i > c.n) {
      const PrefTuple t(a);
      if (is_parking_function(t)) pf_dec.insert(t);
      return;
    }
    for (int v = 1; v <= cap; ++v) {
      a.push_back(v);
      self(self, i + 1, v);
      a.pop_back();
    }
  };
  rec(rec, 1, c.n);
  c.expect(std::set<PrefTuple>(lehmer_dec.begin(), lehmer_dec.end()) == pf_dec,
           "weakly decreasing Lehmer tuples differ from weakly decreasing parking functions");

  std::set<Permutation> image;
  for (const auto& t : lehmer_dec) {
    const auto result = park(t);
    if (result.parked()) image.insert(result.outcome());
  }
  std::set<Permutation> avoiders;
  for (const auto& p : all_permutations(c.n)) {
    if (!contains_pattern_132(p)) avoiders.insert(p);
  }
  c.expect(avoiders.size() == expected,
           std::to_string(avoiders.size()) + " 132-avoiders, C_n = " + std::to_string(expected));
  c.expect(image == avoiders, "outcome image (" + std::to_string(image.size()) + ") differs from Av_n(132) (" +
                                  std::to_string(avoiders.size()) + ")");
  c.report.objects_checked += lehmer_dec.size() + pf_dec.size() + avoiders.size();
  c.detail(std::to_string(image.size()) + " outcomes = Av_n(132), C_n = " + std::to_string(expected));
}

struct TheoremEntry {
  std::string_view id;
  int default_n_max;
  void (*run)(Check&);
};

constexpr std::array kTheorems{
    TheoremEntry{"lehmer-subset-pf", 8, check_lehmer_subset_pf},
    TheoremEntry{"outcome-characterization", 7, check_outcome_characterization},
    TheoremEntry{"depth-box-count", 7, check_depth_box_count},
    TheoremEntry{"arms-legs-balanced", 7, check_arms_legs_balanced},
    TheoremEntry{"peaks-from-pairs-unique", 7, check_peaks_from_pairs_unique},
    TheoremEntry{"phi-surjective", 7, check_phi_surjective},
    TheoremEntry{"outcome-fiber-size", 7, check_outcome_fiber_size},
    TheoremEntry{"outcome-gbsp-bijection", 7, check_outcome_gbsp_bijection},
    TheoremEntry{"minmax-balanced", 9, check_minmax_balanced},
    TheoremEntry{"minmax-surjective", 8, check_minmax_surjective},
    TheoremEntry{"partition-fiber-size", 7, check_partition_fiber_size},
    TheoremEntry{"partition-gbsp-bijection", 8, check_partition_gbsp_bijection},
    TheoremEntry{"outcome-partition-bijection", 8, check_outcome_partition_bijection},
    TheoremEntry{"decreasing-avoids-132", 8, check_decreasing_avoids_132},
    TheoremEntry{"decreasing-park-injective", 8, check_decreasing_park_injective},
    TheoremEntry{"decreasing-outcomes-catalan", 8, check_decreasing_outcomes_catalan},
};

const TheoremEntry& find_theorem(std::string_view id) {
  for (const auto& entry : kTheorems) {
    if (entry.id == id) return entry;
  }
  throw Error(ErrorCode::unknown_theorem, "unknown theorem id '" + std::string(id) + "'");
}

}  // namespace

std::span<const std::string_view> theorem_ids() {
  static const auto ids = [] {
    std::array<std::string_view, kTheorems.size()> out{};
    for (std::size_t k = 0; k < kTheorems.size(); ++k) out[k] = kTheorems[k].id;
    return out;
  }();
  return ids;
}

int default_n_max(std::string_view theorem) { return find_theorem(theorem).default_n_max; }

VerificationReport verify(std::string_view theorem, int n_max, unsigned threads) {
  const auto& entry = find_theorem(theorem);
  if (n_max < 0) throw Error(ErrorCode::index_out_of_range, "n_max must be >= 0", n_max);
  VerificationReport report;
  report.theorem = std::string(entry.id);
  report.n_min = 0;
  report.n_max = n_max;
  const auto start = std::chrono::steady_clock::now();
  std::size_t failures = 0;
  for (int n = 0; n <= n_max; ++n) {
    Check check{report, n, threads, failures};
    try {
      entry.run(check);
    } catch (const Error& e) {
      check.fail(std::string("unexpected ") + std::string(to_string(e.code())) + ": " + e.what());
    }
  }
  if (failures > report.discrepancies.size()) {
    report.discrepancies.push_back("... " + std::to_string(failures - report.discrepancies.size()) +
                                   " further discrepancies not listed");
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lehmer
