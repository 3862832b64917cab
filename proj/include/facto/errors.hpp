#pragma once

#include <stdexcept>
#include <string>

namespace facto {

struct input_too_large : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    parse_error(std::size_t line, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ": " + reason), line(line) {}
    std::size_t line;
};

struct conflict_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace facto
