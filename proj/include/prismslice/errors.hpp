#pragma once

#include <stdexcept>
#include <string>

namespace prismslice {

/// Raised when a mathematical identity the library relies on fails at
/// runtime (never expected to fire; the CLI maps it to exit code 1).
struct model_violation : std::runtime_error {
    explicit model_violation(const std::string& message) : std::runtime_error(message) {}
};

} // namespace prismslice
