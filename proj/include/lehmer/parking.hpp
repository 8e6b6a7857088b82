#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lehmer/permutation.hpp"

namespace lehmer {

/// Preference list: car i prefers spot prefs(i). Entries lie in [1, n].
class PrefTuple {
 public:
  PrefTuple() = default;

  /// Throws Error(invalid_pref_tuple) naming the first entry outside [1, n].
  explicit PrefTuple(std::vector<int> prefs);

  int size() const noexcept { return static_cast<int>(prefs_.size()); }
  int at(int i) const { return prefs_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> prefs() const noexcept { return prefs_; }

  friend bool operator==(const PrefTuple&, const PrefTuple&) = default;
  friend auto operator<=>(const PrefTuple&, const PrefTuple&) = default;

 private:
  std::vector<int> prefs_;
};

/// Car `failed_car` (1-based) drove past spot n without finding a free spot.
struct ParkFailure {
  int failed_car = 0;
  friend bool operator==(const ParkFailure&, const ParkFailure&) = default;
};

/// Either the outcome permutation (spot i -> car parked there) or the first
/// car that failed to park.
class ParkOutcome {
 public:
  explicit ParkOutcome(Permutation outcome) : value_(std::move(outcome)) {}
  explicit ParkOutcome(ParkFailure failure) : value_(failure) {}

  bool parked() const noexcept { return std::holds_alternative<Permutation>(value_); }
  explicit operator bool() const noexcept { return parked(); }

  const Permutation& outcome() const { return std::get<Permutation>(value_); }
  const ParkFailure& failure() const { return std::get<ParkFailure>(value_); }

  friend bool operator==(const ParkOutcome&, const ParkOutcome&) = default;

 private:
  std::variant<Permutation, ParkFailure> value_;
};

/// Cars 1..n arrive in order; each takes the first empty spot at or after its
/// preference.
ParkOutcome park(const PrefTuple& a);

/// Sorted-tuple characterization: a'(i) <= i for the weakly increasing
/// rearrangement a'.
bool is_parking_function(const PrefTuple& a);

/// a(i) <= n-i+1 for every i.
bool is_lehmer(const PrefTuple& a);

bool is_weakly_decreasing(const PrefTuple& a);

/// Shifts every entry up by one.
PrefTuple lehmer_from_inversion_table(const InversionTable& t);

/// Sets a(k) = min(p^-1(k), n-k+1). The result is Lehmer and parks to `p`.
/// Throws Error(not_an_outcome) when `p` contains the arm-leg pattern, since
/// no Lehmer preimage exists then.
PrefTuple canonical_lehmer_preimage(const Permutation& p);

namespace detail {

/// Allocation-free parking kernel used by the enumeration layer. `spots` must
/// have size n; on success spots[s-1] holds the car in spot s. Returns the
/// failing car (1-based) or 0 on success.
int park_into(std::span<const int> prefs, std::span<int> spots) noexcept;

}  // namespace detail

}  // namespace lehmer
