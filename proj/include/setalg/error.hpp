#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace setalg {

enum class ErrorCode {
  incompatible_carrier,
  out_of_bounds,
  unordered_carrier,
  invalid_structure,
  not_a_subset,
  not_a_subspace,
  not_generable,
  component_count_mismatch,
  non_injective_index_map,
  domain_mismatch,
  codomain_mismatch,
  image_outside_codomain,
  not_bijective,
  cap_exceeded,
  no_zero_element,
  not_a_direct_sum,
  index_out_of_range,
  invalid_membership,
  incomplete_table,
  syntax_error,
  duplicate_name,
  unresolved_reference,
  carrier_too_large,
  shape_mismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every library failure is reported through this type; `code()` is stable and
/// suitable for dispatch, `what()` carries a human-readable explanation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace setalg
