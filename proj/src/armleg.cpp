#include "lehmer/armleg.hpp"

#include <algorithm>
#include <string>

#include "lehmer/error.hpp"

namespace lehmer {

PartialArmLegDiagram::PartialArmLegDiagram(int n, std::vector<GridPoint> points)
    : n_(n), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  std::vector<bool> row_used(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto [col, row] = points_[k];
    const std::string where = "(" + std::to_string(col) + "," + std::to_string(row) + ")";
    if (col < 1 || col > n || row < 1 || row > n) {
      throw Error(ErrorCode::invalid_diagram, "point " + where + " is off the grid", col);
    }
    if (row < n - col + 1) {
      throw Error(ErrorCode::invalid_diagram, "point " + where + " lies below the antidiagonal", col);
    }
    if (k > 0 && points_[k - 1].col == col) {
      throw Error(ErrorCode::invalid_diagram, "two points in column " + std::to_string(col), col);
    }
    if (row_used[static_cast<std::size_t>(row)]) {
      throw Error(ErrorCode::invalid_diagram, "two points in row " + std::to_string(row), col);
    }
    row_used[static_cast<std::size_t>(row)] = true;
  }
}

PartialArmLegDiagram peaks(const Permutation& p) {
  const int n = p.size();
  std::vector<GridPoint> points;
  for (int i = 1; i <= n; ++i) {
    if (p.at(i) >= n - i + 1) points.push_back({i, p.at(i)});
  }
  return PartialArmLegDiagram(n, std::move(points));
}

SpacedParen arms_legs(const PartialArmLegDiagram& t) {
  const int n = t.size();
  std::vector<int> arms;
  std::vector<int> legs;
  for (const auto& pt : t.points()) {
    arms.push_back(n - pt.row + 1);
    legs.push_back(pt.col);
  }
  return SpacedParen(n, std::move(arms), std::move(legs));
}

bool is_intersecting(const PartialArmLegDiagram& t) {
  const int n = t.size();
  const auto pts = t.points();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      // Sorted by column, so pts[a] is the left point.
      if (n - pts[a].col + 1 <= pts[b].row && pts[b].row < pts[a].row) return true;
    }
  }
  return false;
}

PartialArmLegDiagram peaks_from_pairs(const MatchedPairs& pairs, int n) {
  std::vector<GridPoint> points;
  for (const auto& [open, close] : pairs.pairs()) {
    if (open < 1 || close > n) {
      throw Error(ErrorCode::invalid_pairs,
                  "pair (" + std::to_string(open) + "," + std::to_string(close) +
                      ") lies outside [1, " + std::to_string(n) + "]",
                  open);
    }
    points.push_back({close, n - open + 1});
  }
  return PartialArmLegDiagram(n, std::move(points));
}

int depth_at(const PartialArmLegDiagram& t, int space) {
  const int n = t.size();
  if (space < 1 || space > n) {
    throw Error(ErrorCode::index_out_of_range,
                "space " + std::to_string(space) + " outside [1, " + std::to_string(n) + "]", space);
  }
  return static_cast<int>(std::count_if(t.points().begin(), t.points().end(), [&](const GridPoint& pt) {
    return pt.col >= space && pt.row >= n - space + 1;
  }));
}

}  // namespace lehmer
