#include "wrlab/error.hpp"

namespace wrlab {

std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonMonotone: return "NonMonotone";
    case Errc::OutsideDomain: return "OutsideDomain";
    case Errc::DegenerateSubdomain: return "DegenerateSubdomain";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::WrongBCKind: return "WrongBCKind";
    case Errc::ParameterMismatch: return "ParameterMismatch";
    case Errc::NonPositiveTime: return "NonPositiveTime";
    case Errc::TailNotNegligible: return "TailNotNegligible";
    case Errc::ConfigError: return "ConfigError";
    case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

}  // namespace wrlab
