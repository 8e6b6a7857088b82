#include "lehmer/io.hpp"

#include <algorithm>
#include <charconv>

#include "lehmer/error.hpp"

namespace lehmer {

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t offset) {
  throw Error(ErrorCode::parse_error, what + " at offset " + std::to_string(offset),
              static_cast<int>(offset));
}

[[noreturn]] void shape_fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) shape_fail(std::string(what) + " must be a JSON array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) shape_fail(std::string(what) + " must contain only integers");
    out.push_back(v.get<int>());
  }
  return out;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) shape_fail(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

int int_member(const json& j, const char* key) {
  const auto& v = member(j, key);
  if (!v.is_number_integer()) shape_fail(std::string("member \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::size_t pos = 0;
  std::size_t end = text.size();
  const bool wrapped = !text.empty() && text.front() == '(';
  if (wrapped) {
    if (text.back() != ')') parse_fail("missing ')'", text.size());
    pos = 1;
    --end;
  }
  std::vector<int> out;
  if (pos == end) return out;
  while (true) {
    while (pos < end && text[pos] == ' ') ++pos;
    int v = 0;
    const auto* first = text.data() + pos;
    const auto [stop, ec] = std::from_chars(first, text.data() + end, v);
    if (ec != std::errc{}) parse_fail("expected an integer", pos);
    out.push_back(v);
    pos += static_cast<std::size_t>(stop - first);
    while (pos < end && text[pos] == ' ') ++pos;
    if (pos == end) break;
    if (text[pos] != ',') parse_fail(std::string("expected ',' but found '") + text[pos] + "'", pos);
    ++pos;
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  const bool digit_string = text.size() > 1 && text.find(',') == std::string_view::npos &&
                            std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  if (digit_string) {
    if (text.size() > 9) parse_fail("digit strings are only accepted for n <= 9; use commas", 9);
    std::vector<int> word;
    for (char ch : text) word.push_back(ch - '0');
    return Permutation(std::move(word));
  }
  return Permutation(parse_int_list(text));
}

PrefTuple parse_pref_tuple(std::string_view text) { return PrefTuple(parse_int_list(text)); }

InversionTable parse_inversion_table(std::string_view text) { return InversionTable(parse_int_list(text)); }

std::string format_list(std::span<const int> values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out;
}

void to_json(json& j, const Permutation& p) { j = std::vector<int>(p.word().begin(), p.word().end()); }
void to_json(json& j, const PrefTuple& a) { j = std::vector<int>(a.prefs().begin(), a.prefs().end()); }
void to_json(json& j, const InversionTable& t) { j = std::vector<int>(t.entries().begin(), t.entries().end()); }
void to_json(json& j, const OutcomePermutation& p) { to_json(j, p.perm()); }

void to_json(json& j, const PartialArmLegDiagram& t) {
  json points = json::array();
  for (const auto& pt : t.points()) points.push_back({pt.col, pt.row});
  j = json{{"n", t.size()}, {"points", std::move(points)}};
}

void to_json(json& j, const SpacedParen& sp) {
  j = json{{"n", sp.size()},
           {"F", std::vector<int>(sp.opens().begin(), sp.opens().end())},
           {"L", std::vector<int>(sp.closes().begin(), sp.closes().end())}};
}

void to_json(json& j, const GBsp& gb) {
  to_json(j, gb.base());
  json g = json::object();
  for (const auto& [space, choice] : gb.choice_map()) g[std::to_string(space)] = choice;
  j["g"] = std::move(g);
}

void to_json(json& j, const SetPartition& b) {
  j = json{{"n", b.size()}, {"blocks", std::vector<std::vector<int>>(b.blocks().begin(), b.blocks().end())}};
}

Permutation permutation_from_json(const json& j) { return Permutation(int_array(j, "permutation")); }
PrefTuple pref_tuple_from_json(const json& j) { return PrefTuple(int_array(j, "preference tuple")); }
InversionTable inversion_table_from_json(const json& j) { return InversionTable(int_array(j, "inversion table")); }

PartialArmLegDiagram diagram_from_json(const json& j) {
  const int n = int_member(j, "n");
  const auto& points = member(j, "points");
  if (!points.is_array()) shape_fail("\"points\" must be an array");
  std::vector<GridPoint> out;
  for (const auto& pt : points) {
    const auto xy = int_array(pt, "point");
    if (xy.size() != 2) shape_fail("each point must be [col,row]");
    out.push_back({xy[0], xy[1]});
  }
  return PartialArmLegDiagram(n, std::move(out));
}

SpacedParen spaced_paren_from_json(const json& j) {
  return SpacedParen(int_member(j, "n"), int_array(member(j, "F"), "F"), int_array(member(j, "L"), "L"));
}

GBsp gbsp_from_json(const json& j) {
  GBspCandidate candidate;
  candidate.n = int_member(j, "n");
  candidate.opens = int_array(member(j, "F"), "F");
  candidate.closes = int_array(member(j, "L"), "L");
  if (j.contains("g")) {
    const auto& g = j.at("g");
    if (!g.is_object()) shape_fail("\"g\" must be an object mapping space to choice");
    for (const auto& [key, value] : g.items()) {
      int space = 0;
      const auto [stop, ec] = std::from_chars(key.data(), key.data() + key.size(), space);
      if (ec != std::errc{} || stop != key.data() + key.size()) shape_fail("bad key \"" + key + "\" in \"g\"");
      if (!value.is_number_integer()) shape_fail("choice for space " + key + " must be an integer");
      candidate.choices[space] = value.get<int>();
    }
  }
  return validate_gbsp(candidate);
}

SetPartition set_partition_from_json(const json& j) {
  const json& blocks_json = j.is_array() ? j : member(j, "blocks");
  if (!blocks_json.is_array()) shape_fail("\"blocks\" must be an array of arrays");
  std::vector<SetPartition::Block> blocks;
  int largest = 0;
  for (const auto& block : blocks_json) {
    blocks.push_back(int_array(block, "block"));
    for (int v : blocks.back()) largest = std::max(largest, v);
  }
  const int n = j.is_object() && j.contains("n") ? int_member(j, "n") : largest;
  return SetPartition(n, std::move(blocks));
}

}  // namespace lehmer
