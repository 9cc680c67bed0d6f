#include "dwindex/error.hpp"

namespace dwindex {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotExtreme: return "NotExtreme";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::LPFailure: return "LPFailure";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace dwindex
