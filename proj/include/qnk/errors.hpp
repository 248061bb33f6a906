#pragma once

#include <stdexcept>
#include <string>

namespace qnk {

enum class ErrorCode {
    InvalidArgument,
    TruncationNotConverged,
    DegenerateSample,
    SingularLocus,
    TauOnTorsion,
    AmbiguousRank,
    IndexOutOfRange,
    EnumerationCap,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace qnk
