#pragma once

#include <stdexcept>
#include <string>

namespace dwindex {

enum class ErrorCode {
    NonSymmetric,
    Degenerate,
    NotExtreme,
    DimensionMismatch,
    NotUnitNorm,
    BadParameter,
    LPFailure,
    Parse,
    Io,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; the C layer maps
// the code onto dw_status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace dwindex
