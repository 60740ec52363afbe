#include "sperner/error.hpp"

namespace sperner {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DuplicateFacet: return "DUPLICATE_FACET";
    case Errc::NonMaximalFacet: return "NON_MAXIMAL_FACET";
    case Errc::RepeatedVertex: return "REPEATED_VERTEX";
    case Errc::VertexClash: return "VERTEX_CLASH";
    case Errc::NotAFacet: return "NOT_A_FACET";
    case Errc::UnknownVertex: return "UNKNOWN_VERTEX";
    case Errc::MissingVertex: return "MISSING_VERTEX";
    case Errc::MalformedInstance: return "MALFORMED_INSTANCE";
    case Errc::InvalidLabelling: return "INVALID_LABELLING";
    case Errc::SearchSpaceTooLarge: return "SEARCH_SPACE_TOO_LARGE";
    case Errc::TooLarge: return "TOO_LARGE";
    case Errc::BadInput: return "BAD_INPUT";
    case Errc::BadParams: return "BAD_PARAMS";
    case Errc::BadDimension: return "BAD_DIMENSION";
    case Errc::NoEligibleFacet: return "NO_ELIGIBLE_FACET";
    case Errc::GraphNotSimple: return "GRAPH_NOT_SIMPLE";
    case Errc::ChiMismatch: return "CHI_MISMATCH";
    case Errc::DimensionMismatch: return "DIMENSION_MISMATCH";
    case Errc::InvariantViolation: return "INVARIANT_VIOLATION";
    case Errc::BadBoundary: return "BAD_BOUNDARY";
    case Errc::FlowLessThan3: return "FLOW_LESS_THAN_3";
    case Errc::RegionDecompositionFailed: return "REGION_DECOMPOSITION_FAILED";
    case Errc::ValidationFailed: return "VALIDATION_FAILED";
    case Errc::IoPath: return "IO_PATH";
    case Errc::IoFormat: return "IO_FORMAT";
  }
  return "UNKNOWN";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace sperner
