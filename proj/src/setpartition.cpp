#include "lehmer/setpartition.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <string>

#include "lehmer/error.hpp"

namespace lehmer {

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw Error(ErrorCode::invalid_partition, "negative ground-set size");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int covered = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorCode::invalid_partition, "empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > n) {
        throw Error(ErrorCode::invalid_partition,
                    "element " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]", v);
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::invalid_partition, "element " + std::to_string(v) + " appears twice", v);
      }
      seen[static_cast<std::size_t>(v)] = true;
      ++covered;
    }
  }
  if (covered != n) {
    for (int v = 1; v <= n; ++v) {
      if (!seen[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::invalid_partition, "element " + std::to_string(v) + " is missing", v);
      }
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& x, const Block& y) { return x.front() < y.front(); });
}

SpacedParen min_max(const SetPartition& b) {
  std::vector<int> mins;
  std::vector<int> maxs;
  for (const auto& block : b.blocks()) {
    mins.push_back(block.front());
    maxs.push_back(block.back());
  }
  return SpacedParen(b.size(), std::move(mins), std::move(maxs));
}

GBsp to_gbsp(const SetPartition& b) {
  const int n = b.size();
  // block_of[v] = index of v's block; blocks are indexed in order of minimum.
  std::vector<int> block_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t k = 0; k < b.blocks().size(); ++k) {
    for (int v : b.blocks()[k]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(k);
  }
  std::vector<int> choices(static_cast<std::size_t>(n), 0);
  std::vector<int> open;  // block indices, ascending == ordered by minimum
  for (int i = 1; i <= n; ++i) {
    const int k = block_of[static_cast<std::size_t>(i)];
    const auto& block = b.blocks()[static_cast<std::size_t>(k)];
    const bool is_min = block.front() == i;
    const bool is_max = block.back() == i;
    if (is_min) {
      if (!is_max) open.push_back(k);
      continue;
    }
    const auto it = std::find(open.begin(), open.end(), k);
    assert(it != open.end());
    choices[static_cast<std::size_t>(i - 1)] = static_cast<int>(it - open.begin()) + 1;
    if (is_max) open.erase(it);
  }
  return GBsp(min_max(b), std::move(choices));
}

SetPartition from_gbsp(const GBsp& gb) {
  const auto& base = gb.base();
  const int n = base.size();
  std::vector<SetPartition::Block> closed;
  std::vector<SetPartition::Block> open;  // ordered by minimum
  [[maybe_unused]] const auto d = depths(base);
  for (int i = 1; i <= n; ++i) {
    const bool opens = base.opens_at(i);
    const bool closes = base.closes_at(i);
    if (opens && closes) {
      closed.push_back({i});
    } else if (opens) {
      open.push_back({i});
    } else {
      assert(static_cast<int>(open.size()) == d[static_cast<std::size_t>(i - 1)]);
      const auto pick = static_cast<std::size_t>(gb.choice(i) - 1);
      open[pick].push_back(i);
      if (closes) {
        closed.push_back(std::move(open[pick]));
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
      }
    }
  }
  assert(open.empty());
  return SetPartition(n, std::move(closed));
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  if (n == 0) {
    visit(SetPartition());
    return;
  }
  // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    int blocks = prefix_max.back() + 1;
    std::vector<SetPartition::Block> parts(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
    visit(SetPartition(n, std::move(parts)));

    int i = n - 1;
    while (i > 0 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) return;
    ++rgs[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      rgs[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(j - 1)];
    }
  }
}

std::vector<SetPartition> enumerate_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& b) { out.push_back(b); });
  return out;
}

std::string render(const SetPartition& b) {
  std::string out;
  for (std::size_t k = 0; k < b.blocks().size(); ++k) {
    if (k > 0) out += '|';
    out += '{';
    const auto& block = b.blocks()[k];
    for (std::size_t e = 0; e < block.size(); ++e) {
      if (e > 0) out += ',';
      out += std::to_string(block[e]);
    }
    out += '}';
  }
  return out;
}

SetPartition parse_set_partition(std::string_view text) {
  auto fail = [](const std::string& what, std::size_t offset) {
    throw Error(ErrorCode::parse_error, what + " at offset " + std::to_string(offset),
                static_cast<int>(offset));
  };
  std::vector<SetPartition::Block> blocks;
  int n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!blocks.empty()) {
      if (text[pos] != '|') fail("expected '|'", pos);
      ++pos;
    }
    if (pos >= text.size() || text[pos] != '{') fail("expected '{'", pos);
    ++pos;
    SetPartition::Block block;
    while (true) {
      int v = 0;
      const auto* first = text.data() + pos;
      const auto [end, ec] = std::from_chars(first, text.data() + text.size(), v);
      if (ec != std::errc{}) fail("expected a number", pos);
      block.push_back(v);
      n = std::max(n, v);
      pos += static_cast<std::size_t>(end - first);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      fail("expected ',' or '}'", pos);
    }
    blocks.push_back(std::move(block));
  }
  return SetPartition(n, std::move(blocks));
}

}  // namespace lehmer
