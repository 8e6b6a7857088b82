#include "lehmer/paren.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <string>

#include "lehmer/error.hpp"

namespace lehmer {

namespace {

void check_subset(int n, const std::vector<int>& values, const char* name) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int v = values[k];
    if (v < 1 || v > n) {
      throw Error(ErrorCode::invalid_spaced_paren,
                  std::string(name) + " contains " + std::to_string(v) + ", outside [1, " +
                      std::to_string(n) + "]",
                  v);
    }
    if (k > 0 && values[k - 1] == v) {
      throw Error(ErrorCode::invalid_spaced_paren,
                  std::string(name) + " lists space " + std::to_string(v) + " twice", v);
    }
  }
}

bool sorted_contains(std::span<const int> values, int v) {
  return std::binary_search(values.begin(), values.end(), v);
}

}  // namespace

SpacedParen::SpacedParen(int n, std::vector<int> opens, std::vector<int> closes)
    : n_(n), opens_(std::move(opens)), closes_(std::move(closes)) {
  if (n < 0) throw Error(ErrorCode::invalid_spaced_paren, "negative length");
  std::sort(opens_.begin(), opens_.end());
  std::sort(closes_.begin(), closes_.end());
  check_subset(n_, opens_, "F");
  check_subset(n_, closes_, "L");
  if (opens_.size() != closes_.size()) {
    throw Error(ErrorCode::invalid_spaced_paren,
                "|F| = " + std::to_string(opens_.size()) + " but |L| = " +
                    std::to_string(closes_.size()));
  }
}

bool SpacedParen::opens_at(int space) const { return sorted_contains(opens_, space); }
bool SpacedParen::closes_at(int space) const { return sorted_contains(closes_, space); }

MatchedPairs::MatchedPairs(std::vector<MatchedPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t a = 0; a < pairs_.size(); ++a) {
    const auto& p = pairs_[a];
    if (p.open > p.close) {
      throw Error(ErrorCode::invalid_pairs,
                  "pair (" + std::to_string(p.open) + "," + std::to_string(p.close) +
                      ") closes before it opens",
                  p.open);
    }
    for (std::size_t b = a + 1; b < pairs_.size(); ++b) {
      const auto& q = pairs_[b];
      if (q.open == p.open || q.close == p.close) {
        throw Error(ErrorCode::invalid_pairs, "two pairs share an endpoint", q.open);
      }
      // p.open < q.open by sorting; crossing means q starts inside p and ends outside.
      if (q.open <= p.close && p.close < q.close) {
        throw Error(ErrorCode::invalid_pairs,
                    "pairs (" + std::to_string(p.open) + "," + std::to_string(p.close) + ") and (" +
                        std::to_string(q.open) + "," + std::to_string(q.close) + ") cross",
                    q.open);
      }
    }
  }
}

SpacedParen MatchedPairs::to_spaced_paren(int n) const {
  std::vector<int> opens;
  std::vector<int> closes;
  for (const auto& p : pairs_) {
    opens.push_back(p.open);
    closes.push_back(p.close);
  }
  return SpacedParen(n, std::move(opens), std::move(closes));
}

int depth(const SpacedParen& sp, int space) {
  if (space < 1 || space > sp.size()) {
    throw Error(ErrorCode::index_out_of_range,
                "space " + std::to_string(space) + " outside [1, " + std::to_string(sp.size()) + "]",
                space);
  }
  const auto opened = std::upper_bound(sp.opens().begin(), sp.opens().end(), space) - sp.opens().begin();
  const auto closed = std::lower_bound(sp.closes().begin(), sp.closes().end(), space) - sp.closes().begin();
  return static_cast<int>(opened - closed);
}

std::vector<int> depths(const SpacedParen& sp) {
  std::vector<int> d(static_cast<std::size_t>(sp.size()));
  int running = 0;
  for (int i = 1; i <= sp.size(); ++i) {
    if (sp.opens_at(i)) ++running;
    d[static_cast<std::size_t>(i - 1)] = running;
    if (sp.closes_at(i)) --running;
  }
  return d;
}

bool is_balanced(const SpacedParen& sp) {
  const auto d = depths(sp);
  return std::all_of(d.begin(), d.end(), [](int v) { return v >= 1; });
}

MatchedPairs matching_pairs(const SpacedParen& sp) {
  std::vector<int> stack;
  std::vector<MatchedPair> pairs;
  for (int i = 1; i <= sp.size(); ++i) {
    if (sp.opens_at(i)) stack.push_back(i);
    if (stack.empty()) {
      throw Error(ErrorCode::unbalanced,
                  "depth at space " + std::to_string(i) + " is not positive", i);
    }
    if (sp.closes_at(i)) {
      pairs.push_back({stack.back(), i});
      stack.pop_back();
    }
  }
  return MatchedPairs(std::move(pairs));
}

GBsp::GBsp(SpacedParen base, std::vector<int> choices)
    : base_(std::move(base)), choices_(std::move(choices)) {
  if (static_cast<int>(choices_.size()) != base_.size()) {
    throw Error(ErrorCode::gbsp_missing_choice,
                "choice vector has length " + std::to_string(choices_.size()) + ", expected " +
                    std::to_string(base_.size()));
  }
  const auto d = depths(base_);
  for (int i = 1; i <= base_.size(); ++i) {
    if (d[static_cast<std::size_t>(i - 1)] < 1) {
      throw Error(ErrorCode::unbalanced,
                  "depth at space " + std::to_string(i) + " is not positive", i);
    }
  }
  for (int i = 1; i <= base_.size(); ++i) {
    const int g = choice(i);
    if (base_.opens_at(i)) {
      if (g != 0) {
        throw Error(ErrorCode::gbsp_extra_choice,
                    "space " + std::to_string(i) + " is opened and takes no choice", i);
      }
      continue;
    }
    if (g == 0) {
      throw Error(ErrorCode::gbsp_missing_choice,
                  "space " + std::to_string(i) + " needs a choice", i);
    }
    const int di = d[static_cast<std::size_t>(i - 1)];
    if (g < 1 || g > di) {
      throw Error(ErrorCode::gbsp_choice_out_of_range,
                  "choice at space " + std::to_string(i) + " is " + std::to_string(g) +
                      ", outside [1, " + std::to_string(di) + "]",
                  i);
    }
  }
}

std::map<int, int> GBsp::choice_map() const {
  std::map<int, int> g;
  for (int i = 1; i <= size(); ++i) {
    if (choice(i) != 0) g.emplace(i, choice(i));
  }
  return g;
}

GBsp validate_gbsp(const GBspCandidate& candidate) {
  SpacedParen base(candidate.n, candidate.opens, candidate.closes);
  const auto d = depths(base);
  for (int i = 1; i <= base.size(); ++i) {
    if (d[static_cast<std::size_t>(i - 1)] < 1) {
      throw Error(ErrorCode::unbalanced,
                  "depth at space " + std::to_string(i) + " is " +
                      std::to_string(d[static_cast<std::size_t>(i - 1)]),
                  i);
    }
  }
  for (const auto& [space, g] : candidate.choices) {
    if (space < 1 || space > base.size() || base.opens_at(space)) {
      throw Error(ErrorCode::gbsp_extra_choice,
                  "choice given for space " + std::to_string(space) +
                      ", which is opened or out of range",
                  space);
    }
  }
  std::vector<int> choices(static_cast<std::size_t>(base.size()), 0);
  for (int i = 1; i <= base.size(); ++i) {
    if (base.opens_at(i)) continue;
    const auto it = candidate.choices.find(i);
    if (it == candidate.choices.end()) {
      throw Error(ErrorCode::gbsp_missing_choice,
                  "no choice given for space " + std::to_string(i), i);
    }
    const int di = d[static_cast<std::size_t>(i - 1)];
    if (it->second < 1 || it->second > di) {
      throw Error(ErrorCode::gbsp_choice_out_of_range,
                  "choice at space " + std::to_string(i) + " is " + std::to_string(it->second) +
                      ", outside [1, " + std::to_string(di) + "]",
                  i);
    }
    choices[static_cast<std::size_t>(i - 1)] = it->second;
  }
  return GBsp(std::move(base), std::move(choices));
}

long long choice_count(const SpacedParen& sp) {
  const auto d = depths(sp);
  long long product = 1;
  for (int i = 1; i <= sp.size(); ++i) {
    if (!sp.opens_at(i)) product *= d[static_cast<std::size_t>(i - 1)];
  }
  return product;
}

namespace {

std::string render_slots(const SpacedParen& sp, const std::vector<int>* choices) {
  std::string out;
  for (int i = 1; i <= sp.size(); ++i) {
    if (i > 1) out += ' ';
    if (sp.opens_at(i)) out += '(';
    const int g = choices ? (*choices)[static_cast<std::size_t>(i - 1)] : 0;
    if (g == 0) {
      out += '_';
    } else {
      out += std::to_string(g);
    }
    if (sp.closes_at(i)) out += ')';
  }
  return out;
}

struct Slot {
  bool open = false;
  bool close = false;
  int choice = 0;  // 0 means '_'
  int offset = 0;  // character offset of the slot body
};

[[noreturn]] void parse_fail(const std::string& what, std::size_t offset) {
  throw Error(ErrorCode::parse_error, what + " at offset " + std::to_string(offset),
              static_cast<int>(offset));
}

std::vector<Slot> parse_slots(std::string_view text) {
  std::vector<Slot> slots;
  std::size_t pos = 0;
  if (text.empty()) return slots;
  while (true) {
    Slot slot;
    if (pos < text.size() && text[pos] == '(') {
      slot.open = true;
      ++pos;
    }
    slot.offset = static_cast<int>(pos);
    if (pos >= text.size()) parse_fail("expected '_' or a number", pos);
    if (text[pos] == '_') {
      ++pos;
    } else if (text[pos] >= '0' && text[pos] <= '9') {
      const auto* first = text.data() + pos;
      const auto* last = text.data() + text.size();
      const auto [end, ec] = std::from_chars(first, last, slot.choice);
      if (ec != std::errc{} || slot.choice < 1) parse_fail("bad choice value", pos);
      pos += static_cast<std::size_t>(end - first);
    } else {
      parse_fail(std::string("unexpected '") + text[pos] + "'", pos);
    }
    if (pos < text.size() && text[pos] == ')') {
      slot.close = true;
      ++pos;
    }
    slots.push_back(slot);
    if (pos == text.size()) break;
    if (text[pos] != ' ') parse_fail(std::string("expected ' ' but found '") + text[pos] + "'", pos);
    ++pos;
  }
  return slots;
}

SpacedParen base_from_slots(const std::vector<Slot>& slots) {
  std::vector<int> opens;
  std::vector<int> closes;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (slots[k].open) opens.push_back(static_cast<int>(k) + 1);
    if (slots[k].close) closes.push_back(static_cast<int>(k) + 1);
  }
  if (opens.size() != closes.size()) {
    throw Error(ErrorCode::parse_error,
                "unequal numbers of '(' and ')' at offset 0", 0);
  }
  return SpacedParen(static_cast<int>(slots.size()), std::move(opens), std::move(closes));
}

}  // namespace

std::string render(const SpacedParen& sp) { return render_slots(sp, nullptr); }

std::string render(const GBsp& gb) {
  const std::vector<int> choices(gb.choices().begin(), gb.choices().end());
  return render_slots(gb.base(), &choices);
}

SpacedParen parse_spaced_paren(std::string_view text) {
  const auto slots = parse_slots(text);
  for (const auto& slot : slots) {
    if (slot.choice != 0) parse_fail("choice digits are not allowed here", static_cast<std::size_t>(slot.offset));
  }
  return base_from_slots(slots);
}

GBsp parse_gbsp(std::string_view text) {
  const auto slots = parse_slots(text);
  for (const auto& slot : slots) {
    if (slot.open && slot.choice != 0) {
      parse_fail("an opened space takes '_', not a choice", static_cast<std::size_t>(slot.offset));
    }
    if (!slot.open && slot.choice == 0) {
      parse_fail("an unopened space needs a choice", static_cast<std::size_t>(slot.offset));
    }
  }
  SpacedParen base = base_from_slots(slots);
  std::vector<int> choices;
  choices.reserve(slots.size());
  for (const auto& slot : slots) choices.push_back(slot.choice);
  return GBsp(std::move(base), std::move(choices));
}

namespace {

// Space i either opens or not, then closes or not. The running depth after
// the open decision must be >= 1 and never negative after closing.
void bsp_rec(int n, int i, int depth_before, std::vector<int>& opens, std::vector<int>& closes,
             const std::function<void(const SpacedParen&)>& visit) {
  if (i > n) {
    if (depth_before == 0) visit(SpacedParen(n, opens, closes));
    return;
  }
  const int remaining = n - i + 1;
  for (int open = 0; open <= 1; ++open) {
    const int d = depth_before + open;
    if (d < 1) continue;
    if (open) opens.push_back(i);
    for (int close = 0; close <= 1; ++close) {
      const int after = d - close;
      // Each later space closes at most once.
      if (after > remaining - 1) continue;
      if (close) closes.push_back(i);
      bsp_rec(n, i + 1, after, opens, closes, visit);
      if (close) closes.pop_back();
    }
    if (open) opens.pop_back();
  }
}

}  // namespace

void for_each_bsp(int n, const std::function<void(const SpacedParen&)>& visit) {
  if (n == 0) {
    visit(SpacedParen());
    return;
  }
  std::vector<int> opens;
  std::vector<int> closes;
  bsp_rec(n, 1, 0, opens, closes, visit);
}

void for_each_choice(const SpacedParen& base, const std::function<void(const GBsp&)>& visit) {
  const auto d = depths(base);
  const int n = base.size();
  std::vector<int> free_spaces;
  for (int i = 1; i <= n; ++i) {
    if (!base.opens_at(i)) free_spaces.push_back(i);
  }
  std::vector<int> choices(static_cast<std::size_t>(n), 0);
  for (int i : free_spaces) choices[static_cast<std::size_t>(i - 1)] = 1;
  while (true) {
    visit(GBsp(base, choices));
    // Odometer, last free space fastest.
    auto k = free_spaces.size();
    while (k > 0) {
      const auto idx = static_cast<std::size_t>(free_spaces[k - 1] - 1);
      if (choices[idx] < d[idx]) {
        ++choices[idx];
        break;
      }
      choices[idx] = 1;
      --k;
    }
    if (k == 0) return;
  }
}

void for_each_gbsp(int n, const std::function<void(const GBsp&)>& visit) {
  for_each_bsp(n, [&](const SpacedParen& sp) { for_each_choice(sp, visit); });
}

std::vector<SpacedParen> enumerate_bsps(int n) {
  std::vector<SpacedParen> out;
  for_each_bsp(n, [&](const SpacedParen& sp) { out.push_back(sp); });
  return out;
}

std::vector<GBsp> enumerate_gbsps(int n) {
  std::vector<GBsp> out;
  for_each_gbsp(n, [&](const GBsp& gb) { out.push_back(gb); });
  return out;
}

}  // namespace lehmer
