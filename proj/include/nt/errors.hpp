#pragma once

#include <stdexcept>
#include <string>

namespace nt {

enum class ErrorKind {
    Parse,
    UnitIdeal,
    EmptyIdeal,
    NonRationalRoot,
    NotFiniteCodimension,
    InvalidFace,
    InvalidInput,
    DegenerateCone,
    InvalidEdge,
    InvalidExchange,
    NotMinimal,
    CoordinateChangeDiverged,
    CertificateFailed,
    UnsupportedFormat,
    Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error(ErrorKind::Parse, "at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Internal invariant check; failures are bugs, never valid outcomes.
inline void ensure(bool condition, const char* what) {
    if (!condition) throw Error(ErrorKind::Internal, what);
}

}  // namespace nt
