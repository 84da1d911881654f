#pragma once

#include <stdexcept>
#include <string>

namespace lppm {

// Bad user input: malformed files, out-of-range values, inconsistent
// dimensions. Maps to CLI exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem trouble: missing or unwritable paths. CLI exit code 1.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// The model admits no policy within the quality budget. CLI exit code 3.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdown that should not occur on well-posed inputs.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lppm
