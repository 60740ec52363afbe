#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sperner {

/// Failure categories raised by library operations. Report-style checks
/// (validate_complex, validate_instance, certificates) never throw these for
/// the property they inspect; they describe the outcome instead.
enum class Errc {
  DuplicateFacet,
  NonMaximalFacet,
  RepeatedVertex,
  VertexClash,
  NotAFacet,
  UnknownVertex,
  MissingVertex,
  MalformedInstance,
  InvalidLabelling,
  SearchSpaceTooLarge,
  TooLarge,
  BadInput,
  BadParams,
  BadDimension,
  NoEligibleFacet,
  GraphNotSimple,
  ChiMismatch,
  DimensionMismatch,
  InvariantViolation,
  BadBoundary,
  FlowLessThan3,
  RegionDecompositionFailed,
  ValidationFailed,
  IoPath,
  IoFormat,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sperner
