#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lehmer/paren.hpp"

namespace lehmer {

/// A set partition of [n]. Blocks are stored canonically: each block
/// ascending, blocks ordered by their minimum.
class SetPartition {
 public:
  using Block = std::vector<int>;

  SetPartition() = default;

  /// Canonicalizes; throws Error(invalid_partition) on empty blocks, repeated
  /// elements, or elements outside [1, n], or if the union is not [1, n].
  SetPartition(int n, std::vector<Block> blocks);

  int size() const noexcept { return n_; }
  std::span<const Block> blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

/// (block minima, block maxima). Always balanced.
SpacedParen min_max(const SetPartition& b);

/// Records, for each i not a block minimum, the rank (by minimum) of i's block
/// among the blocks open just before i. Inverse of from_gbsp.
GBsp to_gbsp(const SetPartition& b);

/// Scans i = 1..n keeping the open blocks ordered by minimum: i in F∩L is a
/// singleton, i in F opens a block, i in L closes the g(i)-th open block, any
/// other i joins the g(i)-th open block.
SetPartition from_gbsp(const GBsp& gb);

/// Restricted-growth-string order; B_n partitions.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_partitions(int n);

/// "{1,4}|{2,3,6}|{5}"; the empty partition renders as "".
std::string render(const SetPartition& b);

/// Parses the pipe form. n is the largest element seen.
SetPartition parse_set_partition(std::string_view text);

}  // namespace lehmer
