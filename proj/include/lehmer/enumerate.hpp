#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lehmer/bijection.hpp"
#include "lehmer/parking.hpp"
#include "lehmer/permutation.hpp"

namespace lehmer {

/// Every Lehmer tuple of length n (n! of them) in lexicographic order.
void for_each_lehmer(int n, const std::function<void(const PrefTuple&)>& visit);
std::vector<PrefTuple> all_lehmer(int n);

/// Weakly decreasing Lehmer tuples, lexicographic order.
std::vector<PrefTuple> all_weakly_decreasing_lehmer(int n);

/// Parks every Lehmer tuple and deduplicates. Sorted lexicographically.
/// Work is split by the first preference across `threads` workers
/// (0 = default_thread_count()). Supports n <= 12.
std::vector<OutcomePermutation> outcome_set(int n, unsigned threads = 0);

/// |outcome_set(n)| without materializing permutations.
std::uint64_t count_outcomes(int n, unsigned threads = 0);

/// LEHMER_THREADS if set and positive, else the hardware concurrency.
unsigned default_thread_count();

/// Bell triangle. Throws Error(overflow) when B_n exceeds 64 bits.
std::uint64_t bell(int n);

/// C_{m+1} = sum C_k C_{m-k}. Throws Error(overflow) beyond 64 bits.
std::uint64_t catalan(int n);

struct VerificationReport {
  std::string theorem;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t objects_checked = 0;
  std::vector<std::string> discrepancies;
  double wall_seconds = 0.0;
  /// One "n=k: ..." line per size with the counts that were compared.
  std::vector<std::string> details;

  bool passed() const noexcept { return discrepancies.empty(); }
};

/// Ids accepted by verify(), in presentation order.
std::span<const std::string_view> theorem_ids();

/// Runs the exhaustive check for `theorem` at every n in [0, n_max].
/// Throws Error(unknown_theorem).
VerificationReport verify(std::string_view theorem, int n_max, unsigned threads = 0);

/// Documented default n_max per theorem id.
int default_n_max(std::string_view theorem);

}  // namespace lehmer
