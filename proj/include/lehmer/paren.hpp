#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lehmer {

/// A spaced parenthesization of n labeled spaces. `opens` (F) holds the spaces
/// preceded by '(' and `closes` (L) the spaces followed by ')'. Both are kept
/// sorted ascending.
class SpacedParen {
 public:
  SpacedParen() = default;

  /// Throws Error(invalid_spaced_paren) on entries outside [1, n], duplicates,
  /// or |F| != |L|.
  SpacedParen(int n, std::vector<int> opens, std::vector<int> closes);

  int size() const noexcept { return n_; }
  std::span<const int> opens() const noexcept { return opens_; }
  std::span<const int> closes() const noexcept { return closes_; }
  int pair_count() const noexcept { return static_cast<int>(opens_.size()); }

  bool opens_at(int space) const;
  bool closes_at(int space) const;

  friend bool operator==(const SpacedParen&, const SpacedParen&) = default;
  friend auto operator<=>(const SpacedParen&, const SpacedParen&) = default;

 private:
  int n_ = 0;
  std::vector<int> opens_;
  std::vector<int> closes_;
};

struct MatchedPair {
  int open = 0;   // space right after the '('
  int close = 0;  // space right before the matching ')'
  friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

/// Matched parenthesis pairs sorted by opening space. Every pair opens before
/// it closes and no two pairs cross (no open_a < open_b <= close_a < close_b).
class MatchedPairs {
 public:
  MatchedPairs() = default;

  /// Sorts by opening space; throws Error(invalid_pairs) if a pair closes
  /// before it opens, two pairs share an endpoint, or two pairs cross.
  explicit MatchedPairs(std::vector<MatchedPair> pairs);

  std::span<const MatchedPair> pairs() const noexcept { return pairs_; }
  int size() const noexcept { return static_cast<int>(pairs_.size()); }

  /// Recovers (F, L) on n spaces.
  SpacedParen to_spaced_paren(int n) const;

  friend bool operator==(const MatchedPairs&, const MatchedPairs&) = default;

 private:
  std::vector<MatchedPair> pairs_;
};

/// A balanced spaced parenthesization plus a choice g(i) in [1, d_i] for each
/// space i not in F.
class GBsp {
 public:
  GBsp() = default;

  /// `choices` is indexed by space (choices[i-1] is g(i)) and must hold 0 at
  /// every space in F. Throws the same errors as validate_gbsp.
  GBsp(SpacedParen base, std::vector<int> choices);

  const SpacedParen& base() const noexcept { return base_; }
  int size() const noexcept { return base_.size(); }

  /// g(i); 0 for spaces in F.
  int choice(int space) const { return choices_[static_cast<std::size_t>(space - 1)]; }
  std::span<const int> choices() const noexcept { return choices_; }

  /// The g map keyed by space.
  std::map<int, int> choice_map() const;

  friend bool operator==(const GBsp&, const GBsp&) = default;
  friend auto operator<=>(const GBsp&, const GBsp&) = default;

 private:
  SpacedParen base_;
  std::vector<int> choices_;
};

/// Unvalidated (F, L, g) as read from user input.
struct GBspCandidate {
  int n = 0;
  std::vector<int> opens;
  std::vector<int> closes;
  std::map<int, int> choices;
};

/// d_i = |F ∩ [1,i]| - |L ∩ [1,i-1]|. May be <= 0 for unbalanced input.
/// Throws Error(index_out_of_range) unless 1 <= i <= n.
int depth(const SpacedParen& sp, int space);

/// All depths d_1..d_n in one pass.
std::vector<int> depths(const SpacedParen& sp);

bool is_balanced(const SpacedParen& sp);

/// Stack matching of the parentheses. Throws Error(unbalanced) naming the
/// first space with d_i <= 0.
MatchedPairs matching_pairs(const SpacedParen& sp);

/// Errors: invalid_spaced_paren, unbalanced, gbsp_missing_choice,
/// gbsp_extra_choice, gbsp_choice_out_of_range. The last three name the
/// offending space.
GBsp validate_gbsp(const GBspCandidate& candidate);

/// Product of d_i over spaces not in F.
long long choice_count(const SpacedParen& sp);

// Text form: one slot per space separated by single spaces. A slot is '_' or
// the decimal g(i), prefixed by '(' iff the space is in F and suffixed by ')'
// iff it is in L, e.g. "(_ (_ 2 1) (_) 1)".
std::string render(const SpacedParen& sp);
std::string render(const GBsp& gb);

/// Every slot must be '_'. Errors carry the 0-based character offset.
SpacedParen parse_spaced_paren(std::string_view text);

/// Slots in F must be '_', all others decimal choices.
GBsp parse_gbsp(std::string_view text);

void for_each_bsp(int n, const std::function<void(const SpacedParen&)>& visit);
void for_each_gbsp(int n, const std::function<void(const GBsp&)>& visit);

/// Every g assignment over one balanced base, in odometer order.
void for_each_choice(const SpacedParen& base,
                     const std::function<void(const GBsp&)>& visit);

std::vector<SpacedParen> enumerate_bsps(int n);
std::vector<GBsp> enumerate_gbsps(int n);

}  // namespace lehmer
