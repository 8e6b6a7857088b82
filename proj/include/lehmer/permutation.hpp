#pragma once

#include <compare>
#include <span>
#include <vector>

namespace lehmer {

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-based: at(i) is the value in position i.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(invalid_permutation) unless `word` rearranges 1..n.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  int at(int pos) const { return word_[static_cast<std::size_t>(pos - 1)]; }
  std::span<const int> word() const noexcept { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Entry i (1-based) counts the values larger than i that appear to the left
/// of i. Entries are 0-based counts, so entry i lies in [0, n-i].
class InversionTable {
 public:
  InversionTable() = default;

  /// Throws Error(invalid_inversion_table) naming the first bad position.
  explicit InversionTable(std::vector<int> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  int at(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const noexcept { return entries_; }

  friend bool operator==(const InversionTable&, const InversionTable&) = default;

 private:
  std::vector<int> entries_;
};

Permutation inverse(const Permutation& p);

InversionTable inversion_table(const Permutation& p);

Permutation from_inversion_table(const InversionTable& t);

/// True iff some positions i < j < k have p(i) < p(k) < p(j).
bool contains_pattern_132(const Permutation& p);

/// True iff some positions i < j have n-i+1 <= p(j) < p(i). A permutation
/// is the outcome of a Lehmer parking function exactly when this is false.
bool contains_armleg_pattern(const Permutation& p);

}  // namespace lehmer
