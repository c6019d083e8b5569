#pragma once

#include <stdexcept>
#include <string>

namespace emext {

enum class ErrorCode {
    invalid_input,       // malformed data or violated precondition
    dimension_mismatch,  // vector/matrix sizes disagree
    not_dominant,        // a dominant weight was required
    nonfinite,           // requested enumeration of an infinite set
    unsupported,         // outside the implemented scope
    inconsistent,        // structure constants or module data fail an identity
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace emext
