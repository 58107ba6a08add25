#include "setalg/error.hpp"

namespace setalg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::incompatible_carrier:
      return "IncompatibleCarrier";
    case ErrorCode::out_of_bounds:
      return "OutOfBounds";
    case ErrorCode::unordered_carrier:
      return "UnorderedCarrier";
    case ErrorCode::invalid_structure:
      return "InvalidStructure";
    case ErrorCode::not_a_subset:
      return "NotASubset";
    case ErrorCode::not_a_subspace:
      return "NotASubspace";
    case ErrorCode::not_generable:
      return "NotGenerable";
    case ErrorCode::component_count_mismatch:
      return "ComponentCountMismatch";
    case ErrorCode::non_injective_index_map:
      return "NonInjectiveIndexMap";
    case ErrorCode::domain_mismatch:
      return "DomainMismatch";
    case ErrorCode::codomain_mismatch:
      return "CodomainMismatch";
    case ErrorCode::image_outside_codomain:
      return "ImageOutsideCodomain";
    case ErrorCode::not_bijective:
      return "NotBijective";
    case ErrorCode::cap_exceeded:
      return "CapExceeded";
    case ErrorCode::no_zero_element:
      return "NoZeroElement";
    case ErrorCode::not_a_direct_sum:
      return "NotADirectSum";
    case ErrorCode::index_out_of_range:
      return "IndexOutOfRange";
    case ErrorCode::invalid_membership:
      return "InvalidMembership";
    case ErrorCode::incomplete_table:
      return "IncompleteTable";
    case ErrorCode::syntax_error:
      return "SyntaxError";
    case ErrorCode::duplicate_name:
      return "DuplicateName";
    case ErrorCode::unresolved_reference:
      return "UnresolvedReference";
    case ErrorCode::carrier_too_large:
      return "CarrierTooLarge";
    case ErrorCode::shape_mismatch:
      return "ShapeMismatch";
  }
  return "Unknown";
}

}  // namespace setalg
