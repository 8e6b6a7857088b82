#pragma once

// Text and JSON forms of every domain type. Text parsers throw
// Error(parse_error) carrying the 0-based character offset of the first bad
// token; JSON readers throw Error(parse_error) for shape problems and the
// owning type's error for domain violations.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lehmer/armleg.hpp"
#include "lehmer/bijection.hpp"
#include "lehmer/paren.hpp"
#include "lehmer/parking.hpp"
#include "lehmer/permutation.hpp"
#include "lehmer/setpartition.hpp"

namespace lehmer {

using json = nlohmann::json;

/// Comma-separated integers, optionally wrapped in one pair of parentheses.
std::vector<int> parse_int_list(std::string_view text);

/// "5,2,4,3,1,6", or a bare digit string such as "524316" when n <= 9.
Permutation parse_permutation(std::string_view text);
PrefTuple parse_pref_tuple(std::string_view text);
InversionTable parse_inversion_table(std::string_view text);

std::string format_list(std::span<const int> values);

void to_json(json& j, const Permutation& p);
void to_json(json& j, const PrefTuple& a);
void to_json(json& j, const InversionTable& t);
void to_json(json& j, const PartialArmLegDiagram& t);
void to_json(json& j, const SpacedParen& sp);
void to_json(json& j, const GBsp& gb);
void to_json(json& j, const SetPartition& b);
void to_json(json& j, const OutcomePermutation& p);

/// Arrays of integers.
Permutation permutation_from_json(const json& j);
PrefTuple pref_tuple_from_json(const json& j);
InversionTable inversion_table_from_json(const json& j);

/// {"n":6,"points":[[col,row],...]}
PartialArmLegDiagram diagram_from_json(const json& j);

/// {"n":7,"F":[...],"L":[...]}; a "g" member is ignored.
SpacedParen spaced_paren_from_json(const json& j);

/// {"n":..,"F":..,"L":..,"g":{"3":2,...}}; validated through validate_gbsp.
GBsp gbsp_from_json(const json& j);

/// {"n":6,"blocks":[[1,4],...]} with "n" optional, or a bare array of blocks.
SetPartition set_partition_from_json(const json& j);

}  // namespace lehmer
