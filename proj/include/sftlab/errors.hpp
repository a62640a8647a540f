#pragma once

#include <stdexcept>
#include <string>

namespace sft {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};

struct EmptyRowOrColumnError : Error {
    using Error::Error;
};

struct NotAsymptoticError : Error {
    using Error::Error;
};

struct NotComposableError : Error {
    using Error::Error;
};

struct MissingWordError : Error {
    using Error::Error;
};

struct InadmissibleImageError : Error {
    using Error::Error;
};

struct HorizonTooSmallError : Error {
    using Error::Error;
};

struct NotPeriodicPreservingError : Error {
    using Error::Error;
};

struct ConditionViolatedError : Error {
    using Error::Error;
};

// Carries a 1-based line number when parsing structured text inputs.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
    int line;
};

}  // namespace sft
