#include "lehmer/bijection.hpp"

#include <cassert>

#include "lehmer/armleg.hpp"
#include "lehmer/error.hpp"

namespace lehmer {

OutcomePermutation::OutcomePermutation(Permutation p) : perm_(std::move(p)) {
  if (contains_armleg_pattern(perm_)) {
    throw Error(ErrorCode::not_an_outcome,
                "permutation has an intersecting arm-leg diagram and is not a Lehmer outcome");
  }
}

SpacedParen phi(const OutcomePermutation& p) { return arms_legs(peaks(p.perm())); }

GBsp phi_prime(const OutcomePermutation& p) {
  const Permutation& word = p.perm();
  const int n = word.size();
  SpacedParen base = phi(p);
  const Permutation column_of = inverse(word);

  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  const auto diagram = peaks(word);
  for (const auto& pt : diagram.points()) used[static_cast<std::size_t>(pt.col)] = true;

  std::vector<int> choices(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    if (base.opens_at(i)) continue;
    const int col = column_of.at(n - i + 1);
    int rank = 0;
    for (int j = 1; j <= col; ++j) {
      if (!used[static_cast<std::size_t>(j)]) ++rank;
    }
    choices[static_cast<std::size_t>(i - 1)] = rank;
    used[static_cast<std::size_t>(col)] = true;
  }
  return GBsp(std::move(base), std::move(choices));
}

OutcomePermutation phi_prime_inv(const GBsp& gb) {
  const SpacedParen& base = gb.base();
  const int n = base.size();
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  const auto diagram = peaks_from_pairs(matching_pairs(base), n);
  for (const auto& pt : diagram.points()) {
    word[static_cast<std::size_t>(pt.col - 1)] = pt.row;
  }
  [[maybe_unused]] const auto d = depths(base);
  for (int i = 1; i <= n; ++i) {
    if (base.opens_at(i)) continue;
    // Row n-i+1 is peakless; its entry goes in an empty column left of i.
    std::vector<int> available;
    for (int j = 1; j < i; ++j) {
      if (word[static_cast<std::size_t>(j - 1)] == 0) available.push_back(j);
    }
    assert(static_cast<int>(available.size()) == d[static_cast<std::size_t>(i - 1)]);
    const int col = available[static_cast<std::size_t>(gb.choice(i) - 1)];
    word[static_cast<std::size_t>(col - 1)] = n - i + 1;
  }
  return OutcomePermutation(Permutation(std::move(word)));
}

long long fiber_size(const SpacedParen& sp) {
  if (!is_balanced(sp)) {
    throw Error(ErrorCode::unbalanced, "fiber is only defined for balanced parenthesizations");
  }
  return choice_count(sp);
}

void for_each_in_fiber(const SpacedParen& sp,
                       const std::function<void(const OutcomePermutation&)>& visit) {
  if (!is_balanced(sp)) {
    throw Error(ErrorCode::unbalanced, "fiber is only defined for balanced parenthesizations");
  }
  for_each_choice(sp, [&](const GBsp& gb) { visit(phi_prime_inv(gb)); });
}

std::vector<OutcomePermutation> fiber(const SpacedParen& sp) {
  std::vector<OutcomePermutation> out;
  for_each_in_fiber(sp, [&](const OutcomePermutation& p) { out.push_back(p); });
  return out;
}

SetPartition outcome_to_partition(const OutcomePermutation& p) { return from_gbsp(phi_prime(p)); }

OutcomePermutation partition_to_outcome(const SetPartition& b) { return phi_prime_inv(to_gbsp(b)); }

}  // namespace lehmer
