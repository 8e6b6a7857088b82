#include "lehmer/permutation.hpp"

#include <numeric>
#include <string>

#include "lehmer/error.hpp"

namespace lehmer {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int pos = 1; pos <= n; ++pos) {
    const int v = at(pos);
    if (v < 1 || v > n) {
      throw Error(ErrorCode::invalid_permutation,
                  "value " + std::to_string(v) + " at position " + std::to_string(pos) +
                      " is outside [1, " + std::to_string(n) + "]",
                  pos);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::invalid_permutation,
                  "value " + std::to_string(v) + " repeats at position " + std::to_string(pos),
                  pos);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

InversionTable::InversionTable(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    if (at(i) < 0 || at(i) > n - i) {
      throw Error(ErrorCode::invalid_inversion_table,
                  "entry " + std::to_string(i) + " = " + std::to_string(at(i)) +
                      " is outside [0, " + std::to_string(n - i) + "]",
                  i);
    }
  }
}

Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(q));
}

InversionTable inversion_table(const Permutation& p) {
  const int n = p.size();
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      if (p.at(j) > p.at(k)) ++entries[static_cast<std::size_t>(p.at(k) - 1)];
    }
  }
  return InversionTable(std::move(entries));
}

// Insert values n, n-1, ..., 1 in turn: value i goes after exactly t(i) of
// the (larger) values already placed.
Permutation from_inversion_table(const InversionTable& t) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.size()));
  for (int i = t.size(); i >= 1; --i) {
    word.insert(word.begin() + t.at(i), i);
  }
  return Permutation(std::move(word));
}

bool contains_pattern_132(const Permutation& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p.at(j) <= p.at(i)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (p.at(i) < p.at(k) && p.at(k) < p.at(j)) return true;
      }
    }
  }
  return false;
}

bool contains_armleg_pattern(const Permutation& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (n - i + 1 <= p.at(j) && p.at(j) < p.at(i)) return true;
    }
  }
  return false;
}

}  // namespace lehmer
