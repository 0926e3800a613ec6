#ifndef HDLINE_ERROR_HPP
#define HDLINE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hdline {

enum class ErrorCode {
    InvalidArgument,
    InvalidGain,
    DegenerateNetwork,
    UnsupportedCapacity,
    ResolutionTooCoarse,
    CapacityLimit,
    WitnessNotApplicable,
    InvalidCnf,
    MissingEdge,
    RepeatedVertex,
    ParseError,
    InternalInvariant,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hdline

#endif
