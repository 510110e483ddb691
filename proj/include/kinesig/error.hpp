#pragma once

#include <stdexcept>
#include <string>

namespace kinesig {

// Bad shapes, bad flags, bad input files. CLI maps these to exit code 1.
struct ValidationError : std::invalid_argument {
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// NaN/Inf surfacing, divergence, I/O failures mid-run. CLI exit code 2.
struct RuntimeFailure : std::runtime_error {
    explicit RuntimeFailure(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kinesig
