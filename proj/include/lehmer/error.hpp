#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lehmer {

enum class ErrorCode {
  invalid_permutation,
  invalid_inversion_table,
  invalid_pref_tuple,
  invalid_diagram,
  invalid_spaced_paren,
  invalid_pairs,
  invalid_partition,
  not_an_outcome,
  unbalanced,
  gbsp_missing_choice,
  gbsp_extra_choice,
  gbsp_choice_out_of_range,
  index_out_of_range,
  parse_error,
  overflow,
  unknown_theorem,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type. `position` carries a
// 1-based space/position for domain errors and a 0-based character offset
// for parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<int> position_;
};

}  // namespace lehmer
