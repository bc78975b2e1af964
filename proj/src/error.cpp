#include "polyfacet/error.hpp"

namespace polyfacet {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::IdenticalVertices: return "IdenticalVertices";
        case ErrorCode::ZeroFoot: return "ZeroFoot";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IterationLimit: return "IterationLimit";
        case ErrorCode::LpFailure: return "LpFailure";
        case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
        case ErrorCode::NotFullDimensional: return "NotFullDimensional";
        case ErrorCode::IncompleteEnumeration: return "IncompleteEnumeration";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::RaysUnsupported: return "RaysUnsupported";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace polyfacet
