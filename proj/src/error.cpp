#include "hdline/error.hpp"

namespace hdline {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidGain: return "invalid-gain";
    case ErrorCode::DegenerateNetwork: return "degenerate-network";
    case ErrorCode::UnsupportedCapacity: return "unsupported-capacity";
    case ErrorCode::ResolutionTooCoarse: return "resolution-too-coarse";
    case ErrorCode::CapacityLimit: return "capacity-limit";
    case ErrorCode::WitnessNotApplicable: return "witness-not-applicable";
    case ErrorCode::InvalidCnf: return "invalid-cnf";
    case ErrorCode::MissingEdge: return "missing-edge";
    case ErrorCode::RepeatedVertex: return "repeated-vertex";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::InternalInvariant: return "internal-invariant";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

} // namespace hdline
