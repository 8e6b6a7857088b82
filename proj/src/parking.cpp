#include "lehmer/parking.hpp"

#include <algorithm>
#include <string>

#include "lehmer/error.hpp"

namespace lehmer {

PrefTuple::PrefTuple(std::vector<int> prefs) : prefs_(std::move(prefs)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    if (at(i) < 1 || at(i) > n) {
      throw Error(ErrorCode::invalid_pref_tuple,
                  "preference " + std::to_string(i) + " = " + std::to_string(at(i)) +
                      " is outside [1, " + std::to_string(n) + "]",
                  i);
    }
  }
}

namespace detail {

int park_into(std::span<const int> prefs, std::span<int> spots) noexcept {
  const auto n = prefs.size();
  std::fill(spots.begin(), spots.end(), 0);
  for (std::size_t car = 0; car < n; ++car) {
    auto spot = static_cast<std::size_t>(prefs[car] - 1);
    while (spot < n && spots[spot] != 0) ++spot;
    if (spot == n) return static_cast<int>(car) + 1;
    spots[spot] = static_cast<int>(car) + 1;
  }
  return 0;
}

}  // namespace detail

ParkOutcome park(const PrefTuple& a) {
  std::vector<int> spots(static_cast<std::size_t>(a.size()));
  if (const int failed = detail::park_into(a.prefs(), spots); failed != 0) {
    return ParkOutcome(ParkFailure{failed});
  }
  return ParkOutcome(Permutation(std::move(spots)));
}

bool is_parking_function(const PrefTuple& a) {
  std::vector<int> sorted(a.prefs().begin(), a.prefs().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool is_lehmer(const PrefTuple& a) {
  const int n = a.size();
  for (int i = 1; i <= n; ++i) {
    if (a.at(i) > n - i + 1) return false;
  }
  return true;
}

bool is_weakly_decreasing(const PrefTuple& a) {
  return std::is_sorted(a.prefs().begin(), a.prefs().end(), std::greater<>{});
}

PrefTuple lehmer_from_inversion_table(const InversionTable& t) {
  std::vector<int> prefs(t.entries().begin(), t.entries().end());
  for (int& v : prefs) ++v;
  return PrefTuple(std::move(prefs));
}

PrefTuple canonical_lehmer_preimage(const Permutation& p) {
  if (contains_armleg_pattern(p)) {
    throw Error(ErrorCode::not_an_outcome,
                "permutation has an intersecting arm-leg diagram; no Lehmer preimage exists");
  }
  const int n = p.size();
  const Permutation spot_of = inverse(p);
  std::vector<int> prefs(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    prefs[static_cast<std::size_t>(k - 1)] = std::min(spot_of.at(k), n - k + 1);
  }
  return PrefTuple(std::move(prefs));
}

}  // namespace lehmer
