#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpcc {

/// Machine-parsable failure category, printed by the CLI as the error tag.
enum class ErrorCode {
    io,       // E_IO
    config,   // E_CONFIG
    data,     // E_DATA
    numeric,  // E_NUMERIC
};

constexpr std::string_view error_tag(ErrorCode code) {
    switch (code) {
        case ErrorCode::io: return "E_IO";
        case ErrorCode::config: return "E_CONFIG";
        case ErrorCode::data: return "E_DATA";
        case ErrorCode::numeric: return "E_NUMERIC";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view tag() const noexcept { return error_tag(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) {
        throw Error(code, message);
    }
}

} // namespace cpcc
