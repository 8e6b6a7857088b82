#pragma once

#include <span>
#include <vector>

#include "lehmer/paren.hpp"
#include "lehmer/permutation.hpp"

namespace lehmer {

/// (col, row) = (position i, value p(i)); row 1 is the bottom of the grid.
struct GridPoint {
  int col = 0;
  int row = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// Points of the n x n grid at or above the antidiagonal (row >= n-col+1),
/// at most one per row and per column. Points are kept sorted by column.
class PartialArmLegDiagram {
 public:
  PartialArmLegDiagram() = default;

  /// Throws Error(invalid_diagram) on points off the grid, below the
  /// antidiagonal, or sharing a row or column.
  PartialArmLegDiagram(int n, std::vector<GridPoint> points);

  int size() const noexcept { return n_; }
  std::span<const GridPoint> points() const noexcept { return points_; }

  friend bool operator==(const PartialArmLegDiagram&, const PartialArmLegDiagram&) = default;

 private:
  int n_ = 0;
  std::vector<GridPoint> points_;
};

/// The entries of `p` at or above the antidiagonal.
PartialArmLegDiagram peaks(const Permutation& p);

/// F = {n-row+1}, L = {col} over the points.
SpacedParen arms_legs(const PartialArmLegDiagram& t);

/// True iff two points with col_i < col_j satisfy n-col_i+1 <= row_j < row_i,
/// i.e. some arm crosses some leg.
bool is_intersecting(const PartialArmLegDiagram& t);

/// One point (close, n-open+1) per matched pair.
PartialArmLegDiagram peaks_from_pairs(const MatchedPairs& pairs, int n);

/// Number of points in the box [i, n] x [n-i+1, n].
int depth_at(const PartialArmLegDiagram& t, int space);

}  // namespace lehmer
