#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace unsharp {

enum class ErrorCode {
    DuplicateElement,
    EmptyName,
    UnknownName,
    CycleDetected,
    NoMeet,
    NoBottom,
    EmptyOperand,
    RequiresBounded,
    ParseError,
    SyntaxError,
    NotEquivalence,
    NotAFilter,
    TooLarge,
    InvalidSpec,
    RetriesExhausted,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; `code()`
// distinguishes them. `line()` is set for errors that come from text input,
// `item()` for errors that can be attributed to one entry of a list argument
// (e.g. the offending cover pair in build_poset).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    std::optional<std::size_t> item() const noexcept { return item_; }

    Error&& at_line(std::size_t line) && {
        line_ = line;
        return std::move(*this);
    }
    Error&& at_item(std::size_t item) && {
        item_ = item;
        return std::move(*this);
    }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
    std::optional<std::size_t> item_;
};

} // namespace unsharp
