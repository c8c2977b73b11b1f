#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quasisym {

/// Raised for precondition violations on library inputs (bad sizes,
/// mismatched player counts, invalid partitions, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers. `line()` is 1-based, 0 when the error is not
/// tied to a particular line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace quasisym
