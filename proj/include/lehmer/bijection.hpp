#pragma once

#include <functional>
#include <vector>

#include "lehmer/paren.hpp"
#include "lehmer/permutation.hpp"
#include "lehmer/setpartition.hpp"

namespace lehmer {

/// A permutation certified to be the outcome of some Lehmer parking function
/// (it avoids the arm-leg pattern). Certification happens once, here.
class OutcomePermutation {
 public:
  OutcomePermutation() = default;

  /// Throws Error(not_an_outcome) if `p` contains the arm-leg pattern.
  explicit OutcomePermutation(Permutation p);

  const Permutation& perm() const noexcept { return perm_; }
  int size() const noexcept { return perm_.size(); }

  friend bool operator==(const OutcomePermutation&, const OutcomePermutation&) = default;
  friend auto operator<=>(const OutcomePermutation&, const OutcomePermutation&) = default;

 private:
  Permutation perm_;
};

/// (Arms, Legs) of the peaks of p.
SpacedParen phi(const OutcomePermutation& p);

/// phi(p) plus, for each peakless row n-i+1 filled top to bottom, the rank of
/// p's column among the still-empty columns in [1, i-1].
GBsp phi_prime(const OutcomePermutation& p);

/// Places the peaks from the matched pairs, then fills the peakless rows top
/// to bottom, taking the g(i)-th smallest empty column in [1, i-1].
OutcomePermutation phi_prime_inv(const GBsp& gb);

/// Product of d_i over i not in F. Throws Error(unbalanced).
long long fiber_size(const SpacedParen& sp);

/// All outcomes with phi(p) == sp, one per g assignment.
void for_each_in_fiber(const SpacedParen& sp,
                       const std::function<void(const OutcomePermutation&)>& visit);
std::vector<OutcomePermutation> fiber(const SpacedParen& sp);

SetPartition outcome_to_partition(const OutcomePermutation& p);
OutcomePermutation partition_to_outcome(const SetPartition& b);

}  // namespace lehmer
