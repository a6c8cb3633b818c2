#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twyang {

enum class ErrorKind {
    PoleAtPoint,
    PoleAtInfinity,
    ZeroFunction,
    ParseError,
    IndexOutOfRange,
    DimensionMismatch,
    NotInvariant,
    MalformedShape,
    ShapeExceedsDimension,
    SharpInconsistent,
    BoxCapExceeded,
    LimitSingular,
    SlopeCollision,
    SingularParameter,
    SingularFamily,
    ExhaustedDepth,
    InternalInconsistency,
    InvalidForm,
    ArityMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers can branch on it.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace twyang
