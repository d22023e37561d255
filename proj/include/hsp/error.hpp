#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsp {

// Stable error kinds, surfaced verbatim by the CLI.
enum class ErrorKind {
    InvalidArgument,
    InvalidEdge,
    IndexOutOfRange,
    FormatError,
    TooLarge,
    InvalidDescriptor,
    DescriptorUnsupported,
    InputNotInClass,
    InvalidWitness,
    GenerationFailed,
    InternalError,
    IoError,
    UsageError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace hsp
