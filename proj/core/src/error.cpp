#include "emext/error.hpp"

namespace emext {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::not_dominant: return "not_dominant";
    case ErrorCode::nonfinite: return "nonfinite";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::inconsistent: return "inconsistent";
    }
    return "unknown";
}

}  // namespace emext
