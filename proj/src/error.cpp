#include "lehmer/error.hpp"

namespace lehmer {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_permutation: return "invalid_permutation";
    case ErrorCode::invalid_inversion_table: return "invalid_inversion_table";
    case ErrorCode::invalid_pref_tuple: return "invalid_pref_tuple";
    case ErrorCode::invalid_diagram: return "invalid_diagram";
    case ErrorCode::invalid_spaced_paren: return "invalid_spaced_paren";
    case ErrorCode::invalid_pairs: return "invalid_pairs";
    case ErrorCode::invalid_partition: return "invalid_partition";
    case ErrorCode::not_an_outcome: return "not_an_outcome";
    case ErrorCode::unbalanced: return "unbalanced";
    case ErrorCode::gbsp_missing_choice: return "gbsp_missing_choice";
    case ErrorCode::gbsp_extra_choice: return "gbsp_extra_choice";
    case ErrorCode::gbsp_choice_out_of_range: return "gbsp_choice_out_of_range";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::unknown_theorem: return "unknown_theorem";
  }
  return "unknown";
}

}  // namespace lehmer
