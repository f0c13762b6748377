#pragma once

#include <stdexcept>
#include <string>

namespace graphorder {

// Error taxonomy mirrors the CLI exit codes: 2 / 3 / 4.
struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace graphorder
