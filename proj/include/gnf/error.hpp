#pragma once

#include <stdexcept>
#include <string>

namespace gnf {

enum class ErrorKind {
    InvalidWeight,
    DegreeTooSmall,
    DegreeMismatch,
    SizeMismatch,
    SingularPairing,
    InconsistentSolve,
    WitnessNotFound,
    SingularJointSystem,
    InvalidParams,
    OutOfRange,
    Parse,
    NotQuasiHomogeneous,
    OrderTooLow,
    Validation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failures carry the byte offset into the source text.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace gnf
