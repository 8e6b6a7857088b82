#pragma once

#include <string>

#include "lehmer/paren.hpp"
#include "lehmer/permutation.hpp"

namespace lehmer {

struct ArmLegSvgOptions {
  int cell = 40;            // pixels per grid cell
  bool extend = false;      // run arms and legs a little past the antidiagonal
  double overhang = 0.35;   // extension length, in cells, when `extend` is set
};

/// Grid, antidiagonal, every entry of `p`, and the arm and leg of each entry
/// at or above the antidiagonal. Position (1, n) is the upper-left cell.
std::string render_armleg_svg(const Permutation& p, const ArmLegSvgOptions& options = {});

/// One text row per grid row, top row first. Legend: '@' peak, '*' entry
/// below the antidiagonal, '-' arm, '|' leg, '+' arm meets leg,
/// '\' antidiagonal, '.' empty. Arms and legs stop short of the antidiagonal
/// cell they end on.
std::string render_armleg_ascii(const Permutation& p);

/// Parenthesis row over a label row, e.g.
///   (_ _ (_ _ (_) _) _)
///    1 2  3 4  5  6  7
/// With `show_depth` the second row holds d_i instead of the space label.
std::string render_paren_ascii(const SpacedParen& sp, bool show_depth = false);
std::string render_paren_ascii(const GBsp& gb, bool show_depth = false);

std::string render_paren_svg(const SpacedParen& sp);
std::string render_paren_svg(const GBsp& gb);

}  // namespace lehmer
