#pragma once

#include <stdexcept>
#include <string>

namespace upb {

enum class ErrorCode {
    MalformedRational,
    DimensionMismatch,
    NonOrthogonal,
    ZeroFactor,
    BadDocument,
    BadRecipe,
    HypothesisViolated,
    InvalidCandidate,
    Internal,
};

const char* error_code_name(ErrorCode code);

class UpbError : public std::runtime_error {
public:
    UpbError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw UpbError(code, what);
}

} // namespace upb
