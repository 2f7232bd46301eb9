#ifndef IVHFS_ERROR_HPP
#define IVHFS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ivhfs {

enum class ErrorKind {
    OutOfRange,
    Inverted,
    EmptyHfe,
    TooShort,
    EmptyIntersection,
    ContextMismatch,
    ParseError,
    SchemaError,
    ValueError,
    UnknownName,
    UsageError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-status mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ivhfs

#endif
