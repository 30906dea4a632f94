#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wrlab {

enum class Errc {
    InvalidArgument,
    NonMonotone,
    OutsideDomain,
    DegenerateSubdomain,
    IndexOutOfRange,
    WrongBCKind,
    ParameterMismatch,
    NonPositiveTime,
    TailNotNegligible,
    ConfigError,
    IoError,
};

std::string_view to_string(Errc code);

/// Exception type used throughout wrlab. The code identifies the failure
/// class so callers (and tests) can branch on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace wrlab
