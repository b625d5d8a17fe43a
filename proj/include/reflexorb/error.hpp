#pragma once

#include <stdexcept>
#include <string>

namespace reflexorb {

/// Failure categories. The CLI maps each one onto a fixed exit status.
enum class ErrorCode {
    invalid_argument,
    not_full_dimensional,
    not_reflexive,
    not_simplicial,
    parse_error,
    hypothesis_violation,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace reflexorb
